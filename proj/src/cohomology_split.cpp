#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "tgr/cohomology.hpp"
#include "tgr/modular.hpp"

namespace tgr {

namespace {

FiniteGroup mixed_radix_group(const std::vector<std::uint64_t>& orders) {
  FiniteGroup G;
  for (auto d : orders) G = direct_product(G, make_cyclic(d));
  return G;
}

std::vector<std::uint64_t> decode(std::size_t idx, const std::vector<std::uint64_t>& orders) {
  std::vector<std::uint64_t> c(orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) {
    c[i] = idx % orders[i];
    idx /= orders[i];
  }
  return c;
}

// Thorough cocycle check for small groups, sampled above.
bool plausible_cocycle(const CocycleTable& a) {
  const std::size_t n = a.group.order();
  if (n <= 128) return a.is_cocycle();
  std::mt19937_64 rng(n);
  const std::uint64_t m = a.modulus;
  for (std::size_t i = 0; i < 4 * n; ++i) {
    Elem g = static_cast<Elem>(rng() % n), h = static_cast<Elem>(rng() % n), k = static_cast<Elem>(rng() % n);
    const FiniteGroup& G = a.group;
    if ((a(g, h) + a(G.mul(g, h), k)) % m != (a(h, k) + a(g, G.mul(h, k))) % m) return false;
  }
  return true;
}

}  // namespace

SplitExtension split_extension(const FiniteGroup& N, const FiniteGroup& T, const Action& act) {
  SplitExtension S;
  S.G = semidirect_product(N, T, act);
  S.N = N;
  S.T = T;
  S.act = close_action(N, T, act);
  S.n_embed.resize(N.order());
  std::iota(S.n_embed.begin(), S.n_embed.end(), 0);
  for (Elem t = 0; t < T.order(); ++t) S.t_embed.push_back(static_cast<Elem>(N.order() * t));
  return S;
}

SplitExtension split_from_subgroups(const FiniteGroup& G, const Subgroup& Nsub, const Subgroup& Tsub) {
  if (!is_normal(G, Nsub)) throw Error(ErrorKind::NotNormal, "split extension: N is not normal");
  if (Nsub.size() * Tsub.size() != G.order())
    throw Error(ErrorKind::InvalidGroup, "split extension: |N||T| differs from |G|");
  for (Elem t : Tsub.members)
    if (t != 0 && Nsub.contains(t)) throw Error(ErrorKind::InvalidGroup, "split extension: N and T intersect");
  SplitExtension S;
  S.G = G;
  std::tie(S.N, S.n_embed) = subgroup_as_group(G, Nsub);
  std::tie(S.T, S.t_embed) = subgroup_as_group(G, Tsub);
  S.act.assign(S.T.order(), std::vector<Elem>(S.N.order()));
  for (Elem t = 0; t < S.T.order(); ++t) {
    Elem gt = S.t_embed[t];
    for (Elem n = 0; n < S.N.order(); ++n) {
      Elem c = G.mul(G.mul(gt, S.n_embed[n]), G.inv(gt));
      auto it = std::lower_bound(S.n_embed.begin(), S.n_embed.end(), c);
      S.act[t][n] = static_cast<Elem>(it - S.n_embed.begin());
    }
  }
  return S;
}

MultiplierAction multiplier_action(const SplitExtension& S, const CohomologyGroup& MN) {
  MultiplierAction out;
  const auto tgens = generating_set(S.T);
  for (Elem t : tgens) {
    std::vector<CohClass> imgs;
    for (std::size_t i = 0; i < MN.orders.size(); ++i)
      imgs.push_back(MN.reduce(pull_back(MN.generators[i], S.N, S.act[t])));
    out.basis_images.push_back(std::move(imgs));
  }
  if (MN.orders.empty()) return out;

  auto apply = [&](std::size_t gi, const CohClass& c) {
    CohClass r = MN.identity();
    for (std::size_t i = 0; i < c.coeffs.size(); ++i)
      r = MN.add(r, MN.scale(out.basis_images[gi][i], c.coeffs[i]));
    return r;
  };
  Subgroup fixed;
  for (const auto& c : MN.all_classes()) {
    bool inv = true;
    for (std::size_t gi = 0; gi < tgens.size() && inv; ++gi) inv = apply(gi, c) == c;
    if (inv) fixed.members.push_back(static_cast<Elem>(MN.index_of(c)));
  }
  std::sort(fixed.members.begin(), fixed.members.end());
  FiniteGroup MG = mixed_radix_group(MN.orders);
  auto [F, emb] = subgroup_as_group(MG, fixed);
  auto D = abelian_decomposition(F);
  out.fixed_orders = D.invariants;
  for (Elem b : D.basis) out.fixed_generators.push_back(CohClass{decode(emb[b], MN.orders)});
  return out;
}

namespace {

std::uint64_t crt(std::uint64_t a, std::uint64_t m, std::uint64_t b, std::uint64_t n) {
  // x = a mod m, x = b mod n, gcd(m, n) = 1
  if (m == 1) return b % n;
  if (n == 1) return a % m;
  std::uint64_t k = mul_mod((b + n - a % n) % n, inv_mod(m % n, n), n);
  return a + m * k;
}

class SemidirectReducer : public ClassReducer {
 public:
  SemidirectReducer(SplitExtension S, CohomologyGroup MN, CohomologyGroup MT,
                    std::map<std::size_t, std::vector<std::uint32_t>> fixed_coords,
                    std::vector<std::uint64_t> e, std::vector<std::uint64_t> f)
      : S_(std::move(S)), MN_(std::move(MN)), MT_(std::move(MT)), fixed_(std::move(fixed_coords)),
        e_(std::move(e)), f_(std::move(f)) {}

  std::vector<std::uint64_t> reduce(const CocycleTable& alpha) const override {
    const std::uint64_t nN = S_.N.order(), nT = S_.T.order();
    CocycleTable a = to_modulus(alpha, nN * nT);
    // |T| * alpha restricted to N has values in |T| Z / |G| = Z/|N|.
    CocycleTable aN = pull_back(a, S_.N, S_.n_embed);
    for (auto& v : aN.values) v %= static_cast<std::uint32_t>(nN);
    aN.modulus = static_cast<std::uint32_t>(nN);
    CohClass cN = MN_.identity();
    if (!MN_.orders.empty()) {
      cN = MN_.reduce(aN);
      std::uint64_t ex = MN_.exponent();
      cN = MN_.scale(cN, inv_mod(nT % ex, ex));
    }
    CocycleTable aT = pull_back(a, S_.T, S_.t_embed);
    for (auto& v : aT.values) v %= static_cast<std::uint32_t>(nT);
    aT.modulus = static_cast<std::uint32_t>(nT);
    CohClass cT = MT_.identity();
    if (!MT_.orders.empty()) {
      cT = MT_.reduce(aT);
      std::uint64_t ex = MT_.exponent();
      cT = MT_.scale(cT, inv_mod(nN % ex, ex));
    }
    std::vector<std::uint32_t> fc;
    if (!e_.empty()) {
      auto it = fixed_.find(MN_.index_of(cN));
      check_invariant(it != fixed_.end(), "restriction to N is not T-invariant");
      fc = it->second;
    }
    const std::size_t L = std::max(e_.size(), f_.size());
    std::vector<std::uint64_t> out(L);
    for (std::size_t i = 0; i < L; ++i) {
      std::size_t ie = i + e_.size(), jf = i + f_.size();
      std::uint64_t em = ie >= L ? e_[ie - L] : 1, fm = jf >= L ? f_[jf - L] : 1;
      std::uint64_t x = ie >= L ? fc[ie - L] : 0, y = jf >= L ? cT.coeffs[jf - L] : 0;
      out[i] = crt(x, em, y, fm);
    }
    return out;
  }

 private:
  SplitExtension S_;
  CohomologyGroup MN_, MT_;
  std::map<std::size_t, std::vector<std::uint32_t>> fixed_;
  std::vector<std::uint64_t> e_, f_;
};

}  // namespace

CohomologyGroup semidirect_multiplier_coprime(const SplitExtension& S, MultiplierOptions opts) {
  const std::uint64_t nN = S.N.order(), nT = S.T.order(), n = nN * nT;
  if (std::gcd(nN, nT) != 1) throw Error(ErrorKind::NotCoprime, "|N| and |T| are not coprime");
  CohomologyGroup MN = multiplier(S.N, opts);
  CohomologyGroup MT = multiplier(S.T, opts);
  MultiplierAction MA = multiplier_action(S, MN);

  // Coordinates of invariant classes in the basis of M(N)^T.
  std::map<std::size_t, std::vector<std::uint32_t>> fixed_coords;
  {
    const auto& e = MA.fixed_orders;
    std::vector<std::uint64_t> c(e.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == e.size()) {
        CohClass s = MN.identity();
        for (std::size_t j = 0; j < e.size(); ++j) s = MN.add(s, MN.scale(MA.fixed_generators[j], c[j]));
        std::vector<std::uint32_t> v(c.begin(), c.end());
        fixed_coords.emplace(MN.index_of(s), v);
        return;
      }
      for (c[i] = 0; c[i] < e[i]; ++c[i]) rec(i + 1);
    };
    if (!MN.orders.empty()) rec(0);
  }

  // Decomposition of G elements as n * t.
  std::vector<Elem> npart(n), tpart(n);
  for (Elem a = 0; a < nN; ++a)
    for (Elem b = 0; b < nT; ++b) {
      Elem g = S.G.mul(S.n_embed[a], S.t_embed[b]);
      npart[g] = a;
      tpart[g] = b;
    }

  auto lift_n = [&](const CohClass& c) {
    CocycleTable alpha = MN.minimized(c);
    const std::uint64_t d = alpha.modulus;
    const std::uint64_t tinv = inv_mod(nT % d, d);
    CocycleTable avg = CocycleTable::zero(S.N, alpha.modulus);
    for (Elem x = 0; x < nN; ++x)
      for (Elem y = 0; y < nN; ++y) {
        std::uint64_t s = 0;
        for (Elem t = 0; t < nT; ++t) s += alpha(S.act[t][x], S.act[t][y]);
        avg.at(x, y) = static_cast<std::uint32_t>(mul_mod(s % d, tinv, d));
      }
    return cocycle_from(S.G, static_cast<std::uint32_t>(n), [&](Elem g, Elem h) {
      return static_cast<long long>((n / d) * avg(npart[g], S.act[tpart[g]][npart[h]]));
    });
  };
  auto lift_t = [&](const CohClass& c) {
    CocycleTable beta = MT.minimized(c);
    const std::uint64_t d = beta.modulus;
    return cocycle_from(S.G, static_cast<std::uint32_t>(n), [&](Elem g, Elem h) {
      return static_cast<long long>((n / d) * beta(tpart[g], tpart[h]));
    });
  };

  CohomologyGroup M;
  M.group = S.G;
  M.method = "coprime-split";
  const auto& e = MA.fixed_orders;
  const auto& f = MT.orders;
  const std::size_t L = std::max(e.size(), f.size());
  for (std::size_t i = 0; i < L; ++i) {
    std::size_t ie = i + e.size(), jf = i + f.size();
    CocycleTable gen = CocycleTable::zero(S.G, static_cast<std::uint32_t>(n));
    std::uint64_t order = 1;
    if (ie >= L) {
      auto t = lift_n(MA.fixed_generators[ie - L]);
      for (std::size_t x = 0; x < gen.values.size(); ++x) gen.values[x] = t.values[x];
      order *= e[ie - L];
    }
    if (jf >= L) {
      CohClass c = MT.identity();
      c.coeffs[jf - L] = 1;
      auto t = lift_t(c);
      for (std::size_t x = 0; x < gen.values.size(); ++x)
        gen.values[x] = static_cast<std::uint32_t>((gen.values[x] + t.values[x]) % n);
      order *= f[jf - L];
    }
    M.orders.push_back(order);
    M.generators.push_back(std::move(gen));
  }
  M.reducer = std::make_shared<SemidirectReducer>(S, MN, MT, std::move(fixed_coords), e, f);
  for (std::size_t i = 0; i < M.generators.size(); ++i) {
    check_invariant(plausible_cocycle(M.generators[i]), "lifted generator is not a cocycle");
    CohClass want = M.identity();
    want.coeffs[i] = 1;
    check_invariant(M.reduce(M.generators[i]) == want, "lifted generator does not reduce to its basis vector");
  }
  return M;
}

std::size_t DualGroup::index_of(const std::vector<std::uint32_t>& values) const {
  for (std::size_t k = 0; k < characters.size(); ++k)
    if (characters[k] == values) return k;
  throw Error(ErrorKind::InvariantViolation, "values do not form a linear character");
}

FiniteGroup DualGroup::as_group() const { return mixed_radix_group(invariants); }

DualGroup dual_group(const FiniteGroup& N) {
  DualGroup D;
  D.base = N;
  auto [Q, proj] = quotient(N, N.structure().derived);
  auto dec = abelian_decomposition(Q);
  D.invariants = dec.invariants;
  D.exponent = dec.invariants.empty() ? 1 : dec.invariants.back();
  std::size_t total = 1;
  for (auto d : D.invariants) total *= d;
  for (std::size_t idx = 0; idx < total; ++idx) {
    auto k = decode(idx, D.invariants);
    std::vector<std::uint32_t> vals(N.order());
    for (Elem x = 0; x < N.order(); ++x) {
      std::uint64_t v = 0;
      for (std::size_t i = 0; i < k.size(); ++i)
        v += k[i] * dec.coords[proj(x)][i] % D.invariants[i] * (D.exponent / D.invariants[i]);
      vals[x] = static_cast<std::uint32_t>(v % D.exponent);
    }
    D.characters.push_back(std::move(vals));
  }
  return D;
}

DualGroup dual_group(const SplitExtension& S) {
  DualGroup D = dual_group(S.N);
  D.acting = S.T;
  std::map<std::vector<std::uint32_t>, std::uint32_t> lookup;
  for (std::size_t k = 0; k < D.characters.size(); ++k) lookup.emplace(D.characters[k], static_cast<std::uint32_t>(k));
  D.perm.assign(S.T.order(), std::vector<std::uint32_t>(D.characters.size()));
  for (Elem t = 0; t < S.T.order(); ++t)
    for (std::size_t k = 0; k < D.characters.size(); ++k) {
      std::vector<std::uint32_t> v(S.N.order());
      for (Elem x = 0; x < S.N.order(); ++x) v[x] = D.characters[k][S.act[t][x]];
      D.perm[t][k] = lookup.at(v);
    }
  return D;
}

std::uint64_t h1_complements(const DualGroup& D, std::size_t size_bound) {
  const FiniteGroup& T = D.acting;
  if (D.perm.empty()) throw Error(ErrorKind::InvariantViolation, "dual group carries no action");
  const FiniteGroup Nst = D.as_group();
  const std::size_t ns = Nst.order();
  if (ns * T.order() > size_bound) throw Error(ErrorKind::SizeBound, "N* : T exceeds the size bound");

  // Left action t . chi = chi^(t^-1).
  Action act;
  act.t_generators = generating_set(T);
  for (Elem t : act.t_generators) {
    std::vector<Elem> phi(ns);
    for (std::size_t k = 0; k < ns; ++k) phi[k] = D.perm[T.inv(t)][k];
    act.automorphisms.push_back(std::move(phi));
  }
  FiniteGroup X = semidirect_product(Nst, T, act);
  const std::size_t kg = act.t_generators.size();

  std::uint64_t choices = 1;
  for (std::size_t i = 0; i < kg; ++i) {
    choices *= ns;
    if (choices > size_bound) throw Error(ErrorKind::SizeBound, "too many complement candidates");
  }
  std::set<std::vector<Elem>> complements;
  std::vector<Elem> imgs(kg);
  for (std::uint64_t idx = 0; idx < choices; ++idx) {
    std::uint64_t r = idx;
    for (std::size_t i = 0; i < kg; ++i) {
      imgs[i] = static_cast<Elem>(r % ns + ns * act.t_generators[i]);
      r /= ns;
    }
    Subgroup C = generate_subgroup(X, imgs);
    if (C.size() == T.order()) complements.insert(C.members);
  }

  std::vector<std::vector<Elem>> list(complements.begin(), complements.end());
  std::map<std::vector<Elem>, std::size_t> pos;
  for (std::size_t i = 0; i < list.size(); ++i) pos[list[i]] = i;
  std::vector<std::size_t> parent(list.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (Elem y : generating_set(X))
    for (std::size_t i = 0; i < list.size(); ++i) {
      std::vector<Elem> conj;
      for (Elem c : list[i]) conj.push_back(X.conj(c, y));
      std::sort(conj.begin(), conj.end());
      std::size_t j = pos.at(conj);
      parent[find(i)] = find(j);
    }
  std::uint64_t classes = 0;
  for (std::size_t i = 0; i < list.size(); ++i) classes += find(i) == i;

  // |Z^1| / |B^1| with |B^1| = |N*| / |(N*)^T|.
  std::uint64_t fixed = 0;
  for (std::size_t k = 0; k < ns; ++k) {
    bool inv = true;
    for (Elem t = 0; t < T.order() && inv; ++t) inv = D.perm[t][k] == k;
    fixed += inv;
  }
  check_invariant(list.size() * fixed == classes * ns, "complement count disagrees with |Z^1|/|B^1|");
  return classes;
}

std::vector<std::uint64_t> h2_cyclic_trace(const DualGroup& D) {
  const FiniteGroup& T = D.acting;
  if (D.perm.empty()) throw Error(ErrorKind::InvariantViolation, "dual group carries no action");
  bool cyclic = false;
  for (Elem t = 0; t < T.order(); ++t) cyclic |= T.elem_order(t) == T.order();
  if (!cyclic) throw Error(ErrorKind::NotCyclic, "acting group is not cyclic");
  const FiniteGroup Nst = D.as_group();
  const std::size_t ns = Nst.order();
  Subgroup fixed, image;
  std::set<Elem> img;
  for (std::size_t k = 0; k < ns; ++k) {
    bool inv = true;
    Elem tr = 0;
    for (Elem t = 0; t < T.order(); ++t) {
      inv &= D.perm[t][k] == k;
      tr = Nst.mul(tr, D.perm[t][k]);
    }
    if (inv) fixed.members.push_back(static_cast<Elem>(k));
    img.insert(tr);
  }
  auto [F, emb] = subgroup_as_group(Nst, fixed);
  for (Elem x : img) {
    auto it = std::lower_bound(emb.begin(), emb.end(), x);
    check_invariant(it != emb.end() && *it == x, "trace image is not invariant");
    image.members.push_back(static_cast<Elem>(it - emb.begin()));
  }
  std::sort(image.members.begin(), image.members.end());
  auto [Q, proj] = quotient(F, image);
  return abelian_invariants(Q);
}

}  // namespace tgr
