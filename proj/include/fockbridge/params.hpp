#pragma once

// Parameters {a_k : k >= 1} of a Heisenberg algebra H[a_i], normalized so
// that [B_k, B_{-k}] = k * a_k for k >= 1.

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "fockbridge/scalar.hpp"

namespace fockbridge {

class HeisenbergParams {
 public:
  using Generator = std::function<Scalar(int)>;

  HeisenbergParams(std::string name, Generator gen);

  /// a_k = 1 for all k (the classical algebra H[1]).
  static HeisenbergParams unit();
  static HeisenbergParams constant(const Scalar& c);
  /// a_k = (1 - t^k) / (1 - q^k).
  static HeisenbergParams macdonald();
  /// a_k = (1 - q^{2nk}) / (1 - q^{2k}).
  static HeisenbergParams ribbon(int n);
  /// a_1..a_K from an explicit list; asking for a larger k is an error.
  static HeisenbergParams from_list(std::vector<Scalar> values);

  /// a_k -> factor * a_k.
  HeisenbergParams scaled(long factor) const;
  HeisenbergParams specialized(const Bindings& b) const;

  /// Memoized a_k; throws Error for k < 1 or a vanishing parameter.
  Scalar a(int k) const;
  const std::string& name() const { return name_; }

  /// Compares a_1..a_{k_max}.
  bool agrees_with(const HeisenbergParams& other, int k_max = 8) const;

 private:
  struct State {
    Generator gen;
    std::mutex mu;
    std::map<int, Scalar> memo;
  };
  std::string name_;
  std::shared_ptr<State> state_;
};

}  // namespace fockbridge
