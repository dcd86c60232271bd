#include "tgr/wedderburn.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <random>

namespace tgr {

using cd = std::complex<double>;

WedderburnType WedderburnType::from_degrees(std::vector<std::uint64_t> degrees) {
  std::map<std::uint64_t, std::uint64_t> count;
  for (auto d : degrees) ++count[d];
  WedderburnType w;
  for (auto [d, k] : count) w.parts.emplace_back(d, k);
  return w;
}

std::uint64_t WedderburnType::dimension() const {
  std::uint64_t s = 0;
  for (auto [d, k] : parts) s += d * d * k;
  return s;
}

std::uint64_t WedderburnType::blocks() const {
  std::uint64_t s = 0;
  for (auto [d, k] : parts) s += k;
  return s;
}

std::uint64_t WedderburnType::multiplicity(std::uint64_t degree) const {
  for (auto [d, k] : parts)
    if (d == degree) return k;
  return 0;
}

std::uint64_t WedderburnType::max_degree() const { return parts.empty() ? 0 : parts.back().first; }

std::string WedderburnType::to_string() const {
  std::string s;
  for (auto [d, k] : parts) {
    if (!s.empty()) s += " + ";
    s += std::to_string(k) + " x " + std::to_string(d);
  }
  return s;
}

RegularityReport alpha_regular(const FiniteGroup& G, const CocycleTable& alpha) {
  const auto& S = G.structure();
  RegularityReport R;
  auto regular = [&](Elem g, const Subgroup& C) {
    for (Elem h : C.members)
      if (alpha(g, h) != alpha(h, g)) return false;
    return true;
  };
  for (std::size_t i = 0; i < S.classes.size(); ++i) {
    Elem g = S.classes[i].front();
    bool reg = regular(g, S.centralizers[i]);
    if (S.classes[i].size() > 1) {
      // A second member, with its centralizer conjugated along.
      Elem g2 = S.classes[i][1];
      Elem y = 0;
      for (Elem t = 0; t < G.order(); ++t)
        if (G.conj(g, t) == g2) {
          y = t;
          break;
        }
      Subgroup C2;
      for (Elem h : S.centralizers[i].members) C2.members.push_back(G.conj(h, y));
      check_invariant(regular(g2, C2) == reg, "regularity is not a class function");
    }
    R.representatives.push_back(g);
    R.regular.push_back(reg);
    R.count += reg;
  }
  return R;
}

namespace {

struct CharacterData {
  // omega[chi][j]: central character of chi on the class sum of class j.
  std::vector<std::vector<cd>> omega;
  std::vector<std::uint64_t> degrees;
};

std::uint64_t checked_degree(double sq, double tol) {
  double d = std::sqrt(sq);
  double r = std::round(d);
  if (r < 1 || std::abs(d - r) > tol * std::max(1.0, r))
    throw Error(ErrorKind::NumericalDegeneracy, "character degree " + std::to_string(d) + " is not integral");
  return static_cast<std::uint64_t>(r);
}

CharacterData abelian_characters(const FiniteGroup& G) {
  auto D = abelian_decomposition(G);
  const std::size_t n = G.order();
  CharacterData out;
  std::vector<std::uint64_t> c(D.invariants.size(), 0);
  for (std::size_t idx = 0; idx < n; ++idx) {
    std::size_t r = idx;
    for (std::size_t i = 0; i < c.size(); ++i) {
      c[i] = r % D.invariants[i];
      r /= D.invariants[i];
    }
    std::vector<cd> w(n);
    for (Elem g = 0; g < n; ++g) {
      double phase = 0;
      for (std::size_t i = 0; i < c.size(); ++i)
        phase += static_cast<double>(c[i] * D.coords[g][i] % D.invariants[i]) / D.invariants[i];
      w[G.structure().class_of[g]] = std::polar(1.0, 2 * std::numbers::pi * phase);
    }
    out.omega.push_back(std::move(w));
    out.degrees.push_back(1);
  }
  return out;
}

CharacterData class_algebra_characters(const FiniteGroup& G, const WedderburnOptions& opts) {
  if (G.is_abelian()) return abelian_characters(G);
  const auto& S = G.structure();
  const std::size_t n = G.order(), r = S.classes.size();
  const std::size_t linear = n / S.derived.size();
  for (int attempt = 0; attempt <= opts.max_reseeds; ++attempt) {
    std::mt19937_64 rng(opts.seed * 1000003ULL + static_cast<std::uint64_t>(attempt));
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    std::vector<cd> coef(r);
    for (auto& z : coef) z = cd(U(rng), U(rng));
    Eigen::MatrixXcd R = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r));
    for (std::size_t k = 0; k < r; ++k) {
      const Elem gk = S.classes[k].front();
      for (Elem x = 0; x < n; ++x) {
        Elem y = G.mul(G.inv(x), gk);
        R(S.class_of[y], static_cast<Eigen::Index>(k)) += coef[S.class_of[x]];
      }
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(R);
    if (solver.info() != Eigen::Success) continue;
    const auto& lam = solver.eigenvalues();
    double scale = 1.0;
    for (Eigen::Index i = 0; i < lam.size(); ++i) scale = std::max(scale, std::abs(lam(i)));
    bool separated = true;
    for (Eigen::Index i = 0; i < lam.size() && separated; ++i)
      for (Eigen::Index j = i + 1; j < lam.size(); ++j)
        if (std::abs(lam(i) - lam(j)) < 1e-7 * scale) {
          separated = false;
          break;
        }
    if (!separated) continue;

    CharacterData out;
    bool ok = true;
    std::uint64_t total = 0, ones = 0;
    for (Eigen::Index c = 0; c < lam.size() && ok; ++c) {
      auto v = solver.eigenvectors().col(c);
      if (std::abs(v(0)) < 1e-12) {
        ok = false;
        break;
      }
      std::vector<cd> w(r);
      double sum = 0;
      for (std::size_t j = 0; j < r; ++j) {
        w[j] = v(static_cast<Eigen::Index>(j)) / v(0);
        sum += std::norm(w[j]) / static_cast<double>(S.classes[j].size());
      }
      try {
        std::uint64_t d = checked_degree(static_cast<double>(n) / sum, opts.tolerance);
        total += d * d;
        ones += d == 1;
        out.degrees.push_back(d);
        out.omega.push_back(std::move(w));
      } catch (const Error&) {
        ok = false;
      }
    }
    if (!ok || total != n || ones != linear) continue;
    return out;
  }
  throw Error(ErrorKind::NumericalDegeneracy,
              "class algebra eigenvectors did not separate for " + (G.name().empty() ? std::string("group") : G.name()));
}

}  // namespace

WedderburnType ordinary_degrees(const FiniteGroup& G, const WedderburnOptions& opts) {
  if (G.order() > opts.direct_bound)
    throw Error(ErrorKind::SizeBound, "order " + std::to_string(G.order()) + " exceeds the direct bound");
  return WedderburnType::from_degrees(class_algebra_characters(G, opts).degrees);
}

std::vector<WedderburnType> degrees_by_central_root(const FiniteGroup& G, Elem central, std::uint64_t d,
                                                    const WedderburnOptions& opts) {
  if (G.order() > opts.extension_bound)
    throw Error(ErrorKind::SizeBound, "order " + std::to_string(G.order()) + " exceeds the extension bound");
  const auto& S = G.structure();
  check_invariant(S.classes[S.class_of[central]].size() == 1, "element is not central");
  auto data = class_algebra_characters(G, opts);
  std::vector<std::vector<std::uint64_t>> split(d);
  for (std::size_t c = 0; c < data.degrees.size(); ++c) {
    cd z = data.omega[c][S.class_of[central]];
    double turns = std::arg(z) / (2 * std::numbers::pi);
    auto k = static_cast<std::int64_t>(std::llround(turns * static_cast<double>(d)));
    cd root = std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(d));
    if (std::abs(z - root) > opts.tolerance)
      throw Error(ErrorKind::RootMatchFailure, "central eigenvalue is not a root of unity of order " + std::to_string(d));
    auto kk = static_cast<std::size_t>(((k % static_cast<std::int64_t>(d)) + static_cast<std::int64_t>(d)) %
                                       static_cast<std::int64_t>(d));
    split[kk].push_back(data.degrees[c]);
  }
  std::vector<WedderburnType> out;
  for (auto& v : split) out.push_back(WedderburnType::from_degrees(std::move(v)));
  return out;
}

namespace {

void check_type(const FiniteGroup& G, const WedderburnType& w, std::uint64_t class_order) {
  check_invariant(w.dimension() == G.order(), "block dimensions do not sum to |G|");
  for (auto [d, k] : w.parts)
    check_invariant(d % class_order == 0, "class order does not divide a projective degree");
}

}  // namespace

WedderburnType twisted_degrees(const CohomologyGroup& M, const CohClass& c, const WedderburnOptions& opts) {
  const std::uint64_t d = M.class_order(c);
  if (d == 1) return ordinary_degrees(M.group, opts);
  if (d * M.group.order() > opts.extension_bound)
    throw Error(ErrorKind::SizeBound, "central extension of order " + std::to_string(d * M.group.order()) +
                                          " exceeds the extension bound");
  auto E = central_extension(M.minimized(c));
  auto split = degrees_by_central_root(E.group, E.z0, d, opts);
  check_type(M.group, split[1], d);
  return split[1];
}

WedderburnType twisted_degrees_numeric(const CocycleTable& alpha, const WedderburnOptions& opts) {
  const FiniteGroup& G = alpha.group;
  const std::size_t n = G.order();
  if (n > opts.numeric_bound)
    throw Error(ErrorKind::SizeBound, "order " + std::to_string(n) + " exceeds the numeric bound");
  if (!alpha.is_normalized()) throw Error(ErrorKind::NotACocycle, "cocycle is not normalized");
  const double m = alpha.modulus;
  auto e = [&](std::uint64_t v) { return std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(v % alpha.modulus) / m); };
  const auto reg = alpha_regular(G, alpha);

  // S_x = sum_g u_g u_x u_g^-1 for each regular class representative x.
  std::vector<std::vector<cd>> sums;
  for (std::size_t i = 0; i < reg.representatives.size(); ++i) {
    if (!reg.regular[i]) continue;
    Elem x = reg.representatives[i];
    std::vector<cd> s(n, cd(0, 0));
    for (Elem g = 0; g < n; ++g) {
      Elem gi = G.inv(g);
      std::uint64_t v = alpha(g, x) + alpha(G.mul(g, x), gi) + alpha.modulus - alpha(g, gi);
      s[G.mul(G.mul(g, x), gi)] += e(v);
    }
    sums.push_back(std::move(s));
  }

  for (int attempt = 0; attempt <= opts.max_reseeds; ++attempt) {
    std::mt19937_64 rng(opts.seed * 1000003ULL + 7919ULL + static_cast<std::uint64_t>(attempt));
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    std::vector<cd> z(n, cd(0, 0));
    for (const auto& s : sums) {
      cd c(U(rng), U(rng));
      for (std::size_t y = 0; y < n; ++y) z[y] += c * s[y];
    }
    const auto N = static_cast<Eigen::Index>(n);
    Eigen::MatrixXcd L = Eigen::MatrixXcd::Zero(N, N);
    for (Elem y = 0; y < n; ++y) {
      if (std::abs(z[y]) == 0) continue;
      for (Elem h = 0; h < n; ++h) L(G.mul(y, h), h) += z[y] * e(alpha(y, h));
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(L, false);
    if (solver.info() != Eigen::Success) continue;
    std::vector<cd> lam(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    double scale = 1.0;
    for (auto v : lam) scale = std::max(scale, std::abs(v));
    const double tight = 1e-6 * scale, loose = 1e-3 * scale;
    // Greedy clustering; clusters must be tight and well separated.
    std::vector<cd> centers;
    std::vector<std::uint64_t> sizes;
    bool ok = true;
    for (auto v : lam) {
      std::size_t best = centers.size();
      for (std::size_t i = 0; i < centers.size(); ++i)
        if (std::abs(v - centers[i]) < loose) {
          if (std::abs(v - centers[i]) > tight) ok = false;
          best = i;
          break;
        }
      if (best == centers.size()) {
        centers.push_back(v);
        sizes.push_back(1);
      } else {
        ++sizes[best];
      }
    }
    if (!ok || centers.size() != reg.count) continue;
    std::vector<std::uint64_t> degrees;
    for (auto s : sizes) {
      auto r = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(s))));
      if (r * r != s) {
        ok = false;
        break;
      }
      degrees.push_back(r);
    }
    if (!ok) continue;
    auto w = WedderburnType::from_degrees(std::move(degrees));
    check_invariant(w.dimension() == n, "eigenspaces do not fill the algebra");
    return w;
  }
  throw Error(ErrorKind::NumericalDegeneracy, "central element eigenvalues did not separate");
}

TwistProfile twist_profile(const CohomologyGroup& M, const WedderburnOptions& opts) {
  TwistProfile P;
  P.multiplier = M;
  const auto classes = M.all_classes();
  std::vector<std::optional<WedderburnType>> types(classes.size());
  const std::size_t n = M.group.order();
  for (const auto& c : classes) {
    const std::size_t idx = M.index_of(c);
    if (types[idx]) continue;
    const std::uint64_t d = M.class_order(c);
    if (d == 1) {
      types[idx] = ordinary_degrees(M.group, opts);
      continue;
    }
    if (M.group.is_abelian()) {
      // All blocks are alike; their number is the size of the regular subgroup.
      const auto regular = alpha_regular(M.group, M.representative(c)).count;
      const auto deg = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(n / regular))));
      check_invariant(deg * deg * regular == n, "abelian twisted algebra is not homogeneous");
      types[idx] = WedderburnType{{{deg, regular}}};
      check_type(M.group, *types[idx], d);
      continue;
    }
    if (d * n <= opts.extension_bound) {
      // One extension yields the algebras of every multiple of c.
      auto E = central_extension(M.minimized(c));
      auto split = degrees_by_central_root(E.group, E.z0, d, opts);
      for (std::uint64_t k = 1; k < d; ++k) {
        CohClass ck = M.scale(c, k);
        const std::size_t j = M.index_of(ck);
        if (types[j]) {
          check_invariant(*types[j] == split[k], "twisted algebra depends on the extension used");
        } else {
          check_type(M.group, split[k], M.class_order(ck));
          types[j] = split[k];
        }
      }
    } else {
      auto w = twisted_degrees_numeric(M.representative(c), opts);
      check_type(M.group, w, d);
      types[idx] = w;
    }
  }
  for (auto& t : types) P.types.push_back(std::move(*t));
  return P;
}

TwistProfile twist_profile(const FiniteGroup& G, const WedderburnOptions& opts) {
  return twist_profile(multiplier(G), opts);
}

WedderburnType schur_cover_profile(const TwistProfile& P) {
  std::vector<std::uint64_t> degrees;
  for (const auto& t : P.types)
    for (auto [d, k] : t.parts) degrees.insert(degrees.end(), k, d);
  auto w = WedderburnType::from_degrees(std::move(degrees));
  check_invariant(w.dimension() == P.multiplier.size() * P.multiplier.group.order(),
                  "cover algebra has the wrong dimension");
  return w;
}

CentralTypeResult is_central_type(const TwistProfile& P) {
  CentralTypeResult R;
  const FiniteGroup& G = P.multiplier.group;
  const auto n = G.order();
  const auto root = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(n))));
  if (root * root != n) {
    R.reason = "order " + std::to_string(n) + " is not a square";
    return R;
  }
  const auto classes = P.multiplier.all_classes();
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const bool simple = P.types[i].blocks() == 1;
    const auto reg = alpha_regular(G, P.multiplier.representative(classes[i]));
    check_invariant(reg.count == P.types[i].blocks(), "regular class count differs from the number of blocks");
    if (simple && !R.witness) R.witness = classes[i];
  }
  R.central_type = R.witness.has_value();
  R.reason = R.central_type ? "class with a single block of degree " + std::to_string(root)
                            : "no class gives a simple algebra";
  return R;
}

CentralTypeResult is_central_type(const FiniteGroup& G, const WedderburnOptions& opts) {
  const auto n = G.order();
  const auto root = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(n))));
  if (root * root != n) return CentralTypeResult{false, std::nullopt, "order " + std::to_string(n) + " is not a square"};
  return is_central_type(twist_profile(G, opts));
}

}  // namespace tgr
