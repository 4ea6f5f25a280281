#ifndef PSIKIT_ALPHA_HPP
#define PSIKIT_ALPHA_HPP

#include <map>
#include <string>

#include "psikit/errors.hpp"

namespace psikit {

// A reweighting function Z -> Z applied to component multiplicities: an
// explicit finite table plus a default rule for values off the table.
class AlphaFn {
public:
  enum class Fallback { identity, constant, none };

  static AlphaFn identity() { return AlphaFn({}, Fallback::identity, 0, "identity"); }
  static AlphaFn constant(long long c) {
    return AlphaFn({}, Fallback::constant, c, "constant " + std::to_string(c));
  }
  // Indicator of a single multiplicity m (the eps_m of the monodromy pieces).
  static AlphaFn indicator(long long m) {
    return AlphaFn({{m, 1}}, Fallback::constant, 0, "eps_" + std::to_string(m));
  }
  static AlphaFn table(std::map<long long, long long> t, Fallback fb = Fallback::none,
                       long long fb_value = 0) {
    return AlphaFn(std::move(t), fb, fb_value, "table");
  }

  long long operator()(long long m) const {
    auto it = table_.find(m);
    if (it != table_.end()) return it->second;
    switch (fb_) {
      case Fallback::identity: return m;
      case Fallback::constant: return fb_value_;
      case Fallback::none:
        throw Error(ErrorKind::alpha_undefined,
                    "alpha undefined on multiplicity " + std::to_string(m));
    }
    return 0;
  }

  const std::string& name() const { return name_; }

private:
  AlphaFn(std::map<long long, long long> t, Fallback fb, long long v, std::string name)
      : table_(std::move(t)), fb_(fb), fb_value_(v), name_(std::move(name)) {}

  std::map<long long, long long> table_;
  Fallback fb_;
  long long fb_value_;
  std::string name_;
};

}  // namespace psikit

#endif
