#include "fatgraph/weightfn.hpp"

#include <stdexcept>

namespace fatgraph {

namespace {
constexpr unsigned kLogBits = 12;
}

WeightFunction WeightFunction::log2p1() { return WeightFunction(Kind::Log, "log"); }
WeightFunction WeightFunction::unit() { return WeightFunction(Kind::Unit, "unit"); }
WeightFunction WeightFunction::linear() { return WeightFunction(Kind::Linear, "linear"); }

WeightFunction WeightFunction::from_name(const std::string& name) {
  if (name == "log") return log2p1();
  if (name == "unit") return unit();
  if (name == "linear") return linear();
  throw std::invalid_argument("unknown weight function: " + name);
}

Rational WeightFunction::operator()(long t) const {
  if (t < 1) throw std::invalid_argument("clique size must be >= 1");
  switch (kind_) {
    case Kind::Unit:
      return Rational(1);
    case Kind::Linear:
      return Rational(t);
    case Kind::Log: {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = cache_.find(t);
      if (it != cache_.end()) return it->second;
      Rational v = log2_fixed(Integer(t + 1), kLogBits);
      cache_.emplace(t, v);
      return v;
    }
  }
  throw std::logic_error("unreachable");
}

long WeightFunction::ceil_at(long t) const {
  Rational v = (*this)(t);
  long c = static_cast<long>(ceil_rational(v).get_si());
  return c < 1 ? 1 : c;
}

}  // namespace fatgraph
