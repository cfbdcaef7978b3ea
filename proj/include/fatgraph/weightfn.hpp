#pragma once

#include <map>
#include <mutex>
#include <string>

#include "fatgraph/rational.hpp"

namespace fatgraph {

// Weight of a clique as a function of its size. Nondecreasing; values are
// rationals so separator weights stay exact. The default "log" evaluates
// log2(t+1) in fixed point (12 fractional bits, exact floor, monotone).
class WeightFunction {
 public:
  enum class Kind { Log, Unit, Linear };

  static WeightFunction log2p1();
  static WeightFunction unit();
  static WeightFunction linear();
  static WeightFunction from_name(const std::string& name);

  Rational operator()(long t) const;
  long ceil_at(long t) const;  // ceil(gamma(t)), >= 1 for t >= 1

  const std::string& name() const { return name_; }

 private:
  explicit WeightFunction(Kind kind, std::string name)
      : kind_(kind), name_(std::move(name)) {}

  Kind kind_;
  std::string name_;
  mutable std::map<long, Rational> cache_;
  mutable std::mutex mutex_;

 public:
  WeightFunction(const WeightFunction& o) : kind_(o.kind_), name_(o.name_) {}
  WeightFunction& operator=(const WeightFunction& o) {
    kind_ = o.kind_;
    name_ = o.name_;
    return *this;
  }
};

}  // namespace fatgraph
