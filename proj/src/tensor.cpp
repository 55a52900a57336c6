#include "pidtensor/tensor.hpp"

#include <cmath>
#include <set>

namespace pidtensor {

Path Path::of(std::vector<VarSet> vertices) {
  if (vertices.size() < 2) throw ShapeError("a path needs at least two vertices");
  for (const auto& v : vertices)
    if (v.empty()) throw NameError("empty variable set in path");
  return Path{std::move(vertices)};
}

std::string Path::label() const {
  std::string s;
  for (const auto& v : vertices) s += varset_label(v);
  return s;
}

namespace detail {

CausalTensor edge_tensor(const JointDistribution& joint, const VarSet& src, const VarSet& dst) {
  const auto src_idx = joint.indices_of(src);
  const auto dst_idx = joint.indices_of(dst);
  Alphabet sa = joint.joined_alphabet(src);
  Alphabet da = joint.joined_alphabet(dst);
  const auto r = static_cast<Eigen::Index>(sa.size());
  const auto c = static_cast<Eigen::Index>(da.size());

  ProbMatrix numer = ProbMatrix::Constant(r, c, Prob(0));
  ProbVector mass = ProbVector::Constant(r, Prob(0));
  joint.for_each_cell([&](const std::vector<std::size_t>& cell, const Prob& p) {
    if (p.is_zero()) return;
    const auto i = static_cast<Eigen::Index>(joint.joined_index(src_idx, cell));
    const auto j = static_cast<Eigen::Index>(joint.joined_index(dst_idx, cell));
    numer(i, j) += p;
    mass[i] += p;
  });

  std::vector<bool> support(sa.size(), false);
  for (Eigen::Index i = 0; i < r; ++i) {
    if (mass[i].is_zero()) continue;
    support[static_cast<std::size_t>(i)] = true;
    for (Eigen::Index j = 0; j < c; ++j)
      if (!numer(i, j).is_zero()) numer(i, j) /= mass[i];
  }
  return CausalTensor{src, dst, std::move(sa), std::move(da), std::move(numer),
                      std::move(support)};
}

CausalTensor identity_tensor(const JointDistribution& joint, const VarSet& vars) {
  Alphabet alpha = joint.joined_alphabet(vars);
  const Pmf marginal = joint.marginal_pmf(vars);
  const auto n = static_cast<Eigen::Index>(alpha.size());
  ProbMatrix m = ProbMatrix::Constant(n, n, Prob(0));
  std::vector<bool> support(alpha.size(), false);
  for (Eigen::Index i = 0; i < n; ++i) {
    m(i, i) = Prob(1);
    support[static_cast<std::size_t>(i)] = !marginal.probs[i].is_zero();
  }
  return CausalTensor{vars, vars, alpha, alpha, std::move(m), std::move(support)};
}

}  // namespace detail

CausalTensor tensor_from_joint(const JointDistribution& joint, const VarSet& src,
                               const VarSet& dst) {
  std::set<std::string> seen(src.begin(), src.end());
  for (const auto& v : dst)
    if (seen.count(v)) throw OverlapError("source and destination overlap on '" + v + "'");
  return detail::edge_tensor(joint, src, dst);
}

CausalTensor reconstruction_tensor(const CausalTensor& tensor, const Pmf& src_pmf) {
  if (src_pmf.alphabet != tensor.source_alphabet)
    throw ShapeError("source pmf alphabet does not match tensor source alphabet");
  const Pmf dst = apply(tensor, src_pmf);
  const auto r = static_cast<Eigen::Index>(tensor.rows());
  const auto c = static_cast<Eigen::Index>(tensor.cols());
  ProbMatrix m = ProbMatrix::Constant(c, r, Prob(0));
  std::vector<bool> support(tensor.cols(), false);
  for (Eigen::Index j = 0; j < c; ++j) {
    const Prob& qj = dst.probs[j];
    if (qj.is_zero()) {
      for (Eigen::Index i = 0; i < r; ++i)
        if (!tensor.matrix(i, j).is_zero() && !src_pmf.probs[i].is_zero())
          throw InvariantError(
              "destination symbol with zero probability receives nonzero column mass");
      continue;
    }
    support[static_cast<std::size_t>(j)] = true;
    for (Eigen::Index i = 0; i < r; ++i) {
      const Prob& aij = tensor.matrix(i, j);
      if (aij.is_zero() || src_pmf.probs[i].is_zero()) continue;
      m(j, i) = aij * src_pmf.probs[i] / qj;
    }
  }
  return CausalTensor{tensor.destination, tensor.source, tensor.destination_alphabet,
                      tensor.source_alphabet, std::move(m), std::move(support)};
}

CausalTensor compose(const CausalTensor& first, const CausalTensor& second) {
  if (first.destination_alphabet != second.source_alphabet)
    throw ShapeError("cannot compose: destination alphabet of the first tensor differs "
                     "from source alphabet of the second");
  ProbMatrix product = first.matrix * second.matrix;
  return CausalTensor{first.source, second.destination, first.source_alphabet,
                      second.destination_alphabet, std::move(product), first.row_support};
}

Pmf apply(const CausalTensor& tensor, const Pmf& input) {
  if (input.alphabet != tensor.source_alphabet)
    throw ShapeError("input pmf alphabet does not match tensor source alphabet");
  ProbVector out = tensor.matrix.transpose() * input.probs;
  return Pmf{tensor.destination_alphabet, std::move(out)};
}

bool is_no_information(const CausalTensor& tensor, double tol) {
  const auto r = static_cast<Eigen::Index>(tensor.rows());
  const auto c = static_cast<Eigen::Index>(tensor.cols());
  Eigen::Index ref = -1;
  for (Eigen::Index i = 0; i < r; ++i) {
    if (!tensor.row_support[static_cast<std::size_t>(i)]) continue;
    if (ref < 0) {
      ref = i;
      continue;
    }
    for (Eigen::Index j = 0; j < c; ++j)
      if (!prob_close(tensor.matrix(i, j), tensor.matrix(ref, j), tol)) return false;
  }
  return true;
}

bool tensors_equal(const CausalTensor& a, const CausalTensor& b, double tol) {
  if (a.source_alphabet != b.source_alphabet || a.destination_alphabet != b.destination_alphabet)
    throw ShapeError("tensors_equal: alphabet mismatch");
  const auto r = static_cast<Eigen::Index>(a.rows());
  const auto c = static_cast<Eigen::Index>(a.cols());
  for (Eigen::Index i = 0; i < r; ++i) {
    const bool sa = a.row_support[static_cast<std::size_t>(i)];
    if (sa != b.row_support[static_cast<std::size_t>(i)]) return false;
    if (!sa) continue;
    for (Eigen::Index j = 0; j < c; ++j)
      if (!prob_close(a.matrix(i, j), b.matrix(i, j), tol)) return false;
  }
  return true;
}

CausalTensor path_tensor(const JointDistribution& joint, const Path& path) {
  if (path.vertices.size() < 2) throw ShapeError("a path needs at least two vertices");
  auto segment = [&](const VarSet& a, const VarSet& b) {
    return a == b ? detail::identity_tensor(joint, a) : detail::edge_tensor(joint, a, b);
  };
  CausalTensor t = segment(path.vertices[0], path.vertices[1]);
  for (std::size_t k = 2; k < path.vertices.size(); ++k)
    t = compose(t, segment(path.vertices[k - 1], path.vertices[k]));
  return t;
}

double path_mutual_information(const JointDistribution& joint, const Path& path) {
  const CausalTensor t = path_tensor(joint, path);
  const Pmf p = joint.marginal_pmf(path.vertices.front());
  const Pmf q = apply(t, p);
  const auto r = static_cast<Eigen::Index>(t.rows());
  const auto c = static_cast<Eigen::Index>(t.cols());
  double s = 0.0;
  for (Eigen::Index i = 0; i < r; ++i) {
    if (p.probs[i].is_zero()) continue;
    const double pi = p.probs[i].to_double();
    for (Eigen::Index k = 0; k < c; ++k) {
      const Prob& tik = t.matrix(i, k);
      if (tik.is_zero()) continue;
      s += pi * tik.to_double() * std::log2(tik.to_double() / q.probs[k].to_double());
    }
  }
  return clamp_nonneg(s, "path mutual information");
}

}  // namespace pidtensor
