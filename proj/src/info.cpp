#include "pidtensor/info.hpp"

#include <cmath>
#include <set>
#include <string>

namespace pidtensor {

namespace {

void require_disjoint(std::initializer_list<const VarSet*> sets) {
  std::set<std::string> seen;
  for (const VarSet* vs : sets)
    for (const auto& v : *vs)
      if (!seen.insert(v).second)
        throw OverlapError("variable sets overlap on '" + v + "'");
}

VarSet concat(const VarSet& a, const VarSet& b) {
  VarSet out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

double clamp_nonneg(double x, const char* what) {
  if (x >= 0.0) return x;
  if (x > -kNonNegFloor) return 0.0;
  throw InvariantError(std::string(what) + " is negative beyond the numeric floor: " +
                       std::to_string(x));
}

bool prob_close(const Prob& a, const Prob& b, double tol) {
  if (a.exact() && b.exact()) return a == b;
  return std::abs(a.to_double() - b.to_double()) <= tol;
}

double entropy(const Pmf& pmf) {
  double h = 0.0;
  for (Eigen::Index i = 0; i < pmf.probs.size(); ++i) {
    const Prob& p = pmf.probs[i];
    if (p.is_zero()) continue;
    const double pd = p.to_double();
    h -= pd * std::log2(pd);
  }
  return clamp_nonneg(h, "entropy");
}

double entropy(const JointDistribution& joint, const VarSet& vars) {
  return entropy(joint.marginal_pmf(vars));
}

double mutual_information(const JointDistribution& joint, const VarSet& a, const VarSet& b) {
  require_disjoint({&a, &b});
  const Pmf pa = joint.marginal_pmf(a);
  const Pmf pb = joint.marginal_pmf(b);
  const Pmf pab = joint.marginal_pmf(concat(a, b));
  // p(a,b) indices factor as ja * |B| + jb because the joined alphabet of
  // a+b is row-major with b fastest.
  double s = 0.0;
  const std::size_t nb = pb.alphabet.size();
  for (std::size_t ja = 0; ja < pa.alphabet.size(); ++ja) {
    for (std::size_t jb = 0; jb < nb; ++jb) {
      const Prob& p = pab.probs[static_cast<Eigen::Index>(ja * nb + jb)];
      if (p.is_zero()) continue;
      const double pd = p.to_double();
      s += pd * std::log2(pd / (pa.probs[static_cast<Eigen::Index>(ja)].to_double() *
                                pb.probs[static_cast<Eigen::Index>(jb)].to_double()));
    }
  }
  return clamp_nonneg(s, "mutual information");
}

double conditional_mutual_information(const JointDistribution& joint, const VarSet& a,
                                      const VarSet& b, const VarSet& given) {
  require_disjoint({&a, &b, &given});
  const Pmf pg = joint.marginal_pmf(given);
  const Pmf pabg = joint.marginal_pmf(concat(concat(a, b), given));
  const Pmf pag = joint.marginal_pmf(concat(a, given));
  const Pmf pbg = joint.marginal_pmf(concat(b, given));
  const std::size_t na = joint.joined_alphabet(a).size();
  const std::size_t nb = joint.joined_alphabet(b).size();
  const std::size_t ng = pg.alphabet.size();
  double s = 0.0;
  for (std::size_t ja = 0; ja < na; ++ja) {
    for (std::size_t jb = 0; jb < nb; ++jb) {
      for (std::size_t jg = 0; jg < ng; ++jg) {
        const Prob& p = pabg.probs[static_cast<Eigen::Index>((ja * nb + jb) * ng + jg)];
        if (p.is_zero()) continue;
        const double num = p.to_double() * pg.probs[static_cast<Eigen::Index>(jg)].to_double();
        const double den = pag.probs[static_cast<Eigen::Index>(ja * ng + jg)].to_double() *
                           pbg.probs[static_cast<Eigen::Index>(jb * ng + jg)].to_double();
        s += p.to_double() * std::log2(num / den);
      }
    }
  }
  return clamp_nonneg(s, "conditional mutual information");
}

double interaction_information(const JointDistribution& joint, const VarSet& x,
                               const VarSet& y, const VarSet& z) {
  return conditional_mutual_information(joint, x, y, z) - mutual_information(joint, x, y);
}

}  // namespace pidtensor
