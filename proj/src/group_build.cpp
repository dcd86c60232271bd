#include <algorithm>
#include <numeric>

#include "tgr/group.hpp"

namespace tgr {

namespace {

std::string join_labels(const std::string& a, const std::string& b) {
  if (a == "1") return b;
  if (b == "1") return a;
  return a + b;
}

std::vector<std::string> product_labels(const FiniteGroup& G, const FiniteGroup& H) {
  std::vector<std::string> labels;
  if (!G.has_labels() || !H.has_labels()) return labels;
  labels.reserve(G.order() * H.order());
  for (Elem h = 0; h < H.order(); ++h)
    for (Elem g = 0; g < G.order(); ++g) labels.push_back(join_labels(G.label(g), H.label(h)));
  return labels;
}

}  // namespace

FiniteGroup make_cyclic(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidGroup, "cyclic group of order 0");
  std::vector<Elem> table(n * n);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) table[g * n + h] = static_cast<Elem>((g + h) % n);
  std::vector<std::string> labels(n);
  for (std::size_t k = 0; k < n; ++k)
    labels[k] = k == 0 ? "1" : k == 1 ? "a" : "a^" + std::to_string(k);
  return FiniteGroup::from_table(n, std::move(table), std::move(labels), "C" + std::to_string(n));
}

FiniteGroup direct_product(const FiniteGroup& G, const FiniteGroup& H) {
  const std::size_t a = G.order(), b = H.order(), n = a * b;
  std::vector<Elem> table(n * n);
  for (Elem h1 = 0; h1 < b; ++h1)
    for (Elem g1 = 0; g1 < a; ++g1) {
      std::size_t x = g1 + a * h1;
      for (Elem h2 = 0; h2 < b; ++h2)
        for (Elem g2 = 0; g2 < a; ++g2)
          table[x * n + g2 + a * h2] = static_cast<Elem>(G.mul(g1, g2) + a * H.mul(h1, h2));
    }
  std::string name;
  if (!G.name().empty() && !H.name().empty()) name = G.name() + "x" + H.name();
  return FiniteGroup::from_table(n, std::move(table), product_labels(G, H), std::move(name));
}

std::vector<std::vector<Elem>> close_action(const FiniteGroup& N, const FiniteGroup& T,
                                            const Action& act) {
  if (act.t_generators.size() != act.automorphisms.size())
    throw Error(ErrorKind::ActionNotHomomorphism, "generator/automorphism count mismatch");
  const std::size_t n = N.order();
  for (const auto& phi : act.automorphisms) {
    GroupHom h{N, N, phi};
    if (phi.size() != n || !h.is_bijective() || !h.is_homomorphism())
      throw Error(ErrorKind::ActionNotHomomorphism, "generator image is not an automorphism");
  }
  std::vector<std::vector<Elem>> table(T.order());
  table[0].resize(n);
  std::iota(table[0].begin(), table[0].end(), 0);
  std::vector<Elem> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Elem t = queue[i];
    for (std::size_t s = 0; s < act.t_generators.size(); ++s) {
      Elem ts = T.mul(t, act.t_generators[s]);
      std::vector<Elem> img(n);
      for (Elem x = 0; x < n; ++x) img[x] = table[t][act.automorphisms[s][x]];
      if (table[ts].empty()) {
        table[ts] = std::move(img);
        queue.push_back(ts);
      } else if (table[ts] != img) {
        throw Error(ErrorKind::ActionNotHomomorphism,
                    "action is inconsistent with the relations of the acting group");
      }
    }
  }
  if (queue.size() != T.order())
    throw Error(ErrorKind::InvalidGroup, "action generators do not generate the acting group");
  return table;
}

FiniteGroup semidirect_product(const FiniteGroup& N, const FiniteGroup& T, const Action& act) {
  auto A = close_action(N, T, act);
  const std::size_t a = N.order(), b = T.order(), n = a * b;
  std::vector<Elem> table(n * n);
  for (Elem t1 = 0; t1 < b; ++t1)
    for (Elem n1 = 0; n1 < a; ++n1) {
      std::size_t x = n1 + a * t1;
      const auto& phi = A[t1];
      for (Elem t2 = 0; t2 < b; ++t2) {
        Elem t = T.mul(t1, t2);
        for (Elem n2 = 0; n2 < a; ++n2)
          table[x * n + n2 + a * t2] = static_cast<Elem>(N.mul(n1, phi[n2]) + a * t);
      }
    }
  std::string name;
  if (!N.name().empty() && !T.name().empty()) name = N.name() + ":" + T.name();
  return FiniteGroup::from_table(n, std::move(table), product_labels(N, T), std::move(name));
}

CocycleTable CocycleTable::zero(const FiniteGroup& G, std::uint32_t modulus) {
  CocycleTable c;
  c.group = G;
  c.modulus = modulus;
  c.values.assign(G.order() * G.order(), 0);
  return c;
}

bool CocycleTable::is_normalized() const {
  for (Elem g = 0; g < group.order(); ++g)
    if ((*this)(0, g) != 0 || (*this)(g, 0) != 0) return false;
  return true;
}

bool CocycleTable::is_cocycle() const {
  const std::size_t n = group.order();
  if (values.size() != n * n) return false;
  const std::uint64_t m = modulus;
  for (Elem g = 1; g < n; ++g)
    for (Elem h = 1; h < n; ++h) {
      Elem gh = group.mul(g, h);
      std::uint64_t a = (*this)(g, h);
      for (Elem k = 1; k < n; ++k) {
        std::uint64_t lhs = a + (*this)(gh, k);
        std::uint64_t rhs = (*this)(h, k) + (*this)(g, group.mul(h, k));
        if (lhs % m != rhs % m) return false;
      }
    }
  return true;
}

CentralExtension central_extension(const CocycleTable& alpha) {
  if (!alpha.is_normalized() || !alpha.is_cocycle())
    throw Error(ErrorKind::NotACocycle, "central_extension: input is not a normalized 2-cocycle");
  const FiniteGroup& G = alpha.group;
  const std::size_t d = alpha.modulus, m = G.order(), n = d * m;
  std::vector<Elem> table(n * n);
  for (Elem g = 0; g < m; ++g)
    for (Elem a = 0; a < d; ++a) {
      std::size_t x = a + d * g;
      for (Elem h = 0; h < m; ++h) {
        Elem gh = G.mul(g, h);
        std::uint32_t c = alpha(g, h);
        for (Elem b = 0; b < d; ++b)
          table[x * n + b + d * h] = static_cast<Elem>((a + b + c) % d + d * gh);
      }
    }
  std::vector<std::string> labels;
  if (G.has_labels()) {
    for (Elem g = 0; g < m; ++g)
      for (Elem a = 0; a < d; ++a) {
        std::string z = a == 0 ? "1" : a == 1 ? "z" : "z^" + std::to_string(a);
        labels.push_back(join_labels(z, G.label(g)));
      }
  }
  CentralExtension ext;
  ext.group = FiniteGroup::from_table(n, std::move(table), std::move(labels));
  ext.central.members.resize(d);
  std::iota(ext.central.members.begin(), ext.central.members.end(), 0);
  ext.z0 = d > 1 ? 1 : 0;
  return ext;
}

std::pair<FiniteGroup, GroupHom> quotient(const FiniteGroup& G, const Subgroup& N) {
  if (!is_normal(G, N)) throw Error(ErrorKind::NotNormal, "quotient by a non-normal subgroup");
  const std::size_t n = G.order();
  std::vector<Elem> coset(n, UINT32_MAX);
  std::vector<Elem> reps;
  for (Elem g = 0; g < n; ++g) {
    if (coset[g] != UINT32_MAX) continue;
    Elem id = static_cast<Elem>(reps.size());
    reps.push_back(g);
    for (Elem x : N.members) coset[G.mul(g, x)] = id;
  }
  const std::size_t q = reps.size();
  std::vector<Elem> table(q * q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) table[i * q + j] = coset[G.mul(reps[i], reps[j])];
  std::vector<std::string> labels;
  if (G.has_labels())
    for (Elem r : reps) labels.push_back(G.label(r));
  FiniteGroup Q = FiniteGroup::from_table(q, std::move(table), std::move(labels));
  GroupHom proj{G, Q, std::move(coset)};
  return {Q, std::move(proj)};
}

}  // namespace tgr
