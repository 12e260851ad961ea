#include "fockbridge/params.hpp"

namespace fockbridge {

namespace {

// 1 - x^k where x is one of the formal variables.
Scalar one_minus_power(const Scalar& x, int k) { return Scalar(1) - x.pow(k); }

}  // namespace

HeisenbergParams::HeisenbergParams(std::string name, Generator gen)
    : name_(std::move(name)), state_(std::make_shared<State>()) {
  state_->gen = std::move(gen);
}

HeisenbergParams HeisenbergParams::unit() {
  return HeisenbergParams("unit", [](int) { return Scalar(1); });
}

HeisenbergParams HeisenbergParams::constant(const Scalar& c) {
  return HeisenbergParams("constant:" + c.to_string(), [c](int) { return c; });
}

HeisenbergParams HeisenbergParams::macdonald() {
  return HeisenbergParams("macdonald", [](int k) {
    return one_minus_power(Scalar::t(), k) / one_minus_power(Scalar::q(), k);
  });
}

HeisenbergParams HeisenbergParams::ribbon(int n) {
  if (n < 1) throw Error("ribbon parameters need n >= 1");
  return HeisenbergParams("ribbon:" + std::to_string(n), [n](int k) {
    return one_minus_power(Scalar::q(), 2 * n * k) / one_minus_power(Scalar::q(), 2 * k);
  });
}

HeisenbergParams HeisenbergParams::from_list(std::vector<Scalar> values) {
  std::string name = "list:";
  for (std::size_t i = 0; i < values.size(); ++i) name += (i ? "," : "") + values[i].to_string();
  return HeisenbergParams(name, [values = std::move(values)](int k) {
    if (k > static_cast<int>(values.size()))
      throw Error("parameter a_" + std::to_string(k) + " not supplied");
    return values[k - 1];
  });
}

HeisenbergParams HeisenbergParams::scaled(long factor) const {
  HeisenbergParams self = *this;
  return HeisenbergParams(std::to_string(factor) + "*" + name_,
                          [self, factor](int k) { return Scalar(factor) * self.a(k); });
}

HeisenbergParams HeisenbergParams::specialized(const Bindings& b) const {
  if (b.empty()) return *this;
  HeisenbergParams self = *this;
  return HeisenbergParams(name_ + "|" + b.to_string(), [self, b](int k) { return specialize(self.a(k), b); });
}

Scalar HeisenbergParams::a(int k) const {
  if (k < 1) throw Error("Heisenberg parameters are indexed by k >= 1");
  std::lock_guard lock(state_->mu);
  auto it = state_->memo.find(k);
  if (it != state_->memo.end()) return it->second;
  Scalar v = state_->gen(k);
  if (v.is_zero()) throw Error("Heisenberg parameter a_" + std::to_string(k) + " vanishes");
  state_->memo.emplace(k, v);
  return v;
}

bool HeisenbergParams::agrees_with(const HeisenbergParams& other, int k_max) const {
  if (state_ == other.state_) return true;
  // Lists only carry finitely many values; compare the common prefix.
  for (int k = 1; k <= k_max; ++k) {
    std::optional<Scalar> x, y;
    try {
      x = a(k);
      y = other.a(k);
    } catch (const Error&) {
      break;
    }
    if (!(*x == *y)) return false;
  }
  return true;
}

}  // namespace fockbridge
