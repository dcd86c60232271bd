#include "tgr/equivalence.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

#include "tgr/error.hpp"

namespace tgr {

namespace {

std::string list(const std::vector<std::uint64_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

}  // namespace

std::vector<std::uint64_t> ProfileData::coords(std::size_t idx) const {
  std::vector<std::uint64_t> c(multiplier.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = idx % multiplier[i];
    idx /= multiplier[i];
  }
  return c;
}

std::size_t ProfileData::index_of(const std::vector<std::uint64_t>& c) const {
  std::size_t idx = 0;
  for (std::size_t i = multiplier.size(); i-- > 0;) idx = idx * multiplier[i] + c[i] % multiplier[i];
  return idx;
}

std::uint64_t ProfileData::class_order(std::size_t idx) const {
  std::uint64_t o = 1;
  auto c = coords(idx);
  for (std::size_t i = 0; i < c.size(); ++i) o = std::lcm(o, multiplier[i] / std::gcd(multiplier[i], c[i]));
  return o;
}

WedderburnType ProfileData::cover() const {
  std::vector<std::uint64_t> degrees;
  for (const auto& t : types)
    for (auto [d, k] : t.parts) degrees.insert(degrees.end(), k, d);
  return WedderburnType::from_degrees(std::move(degrees));
}

std::vector<WedderburnType> ProfileData::type_multiset() const {
  auto v = types;
  std::sort(v.begin(), v.end());
  return v;
}

bool ProfileData::central_type() const {
  return std::any_of(types.begin(), types.end(), [](const WedderburnType& w) { return w.blocks() == 1; });
}

ProfileData profile_data(const FiniteGroup& G, std::string name, const WedderburnOptions& opts) {
  ProfileData P;
  P.name = std::move(name);
  P.order = G.order();
  P.abelian = G.is_abelian();
  auto T = twist_profile(G, opts);
  P.ordinary = ordinary_degrees(G, opts);
  check_invariant(!T.types.empty() && T.types[0] == P.ordinary, "untwisted class does not give the group algebra");
  P.multiplier = T.multiplier.orders;
  P.types = std::move(T.types);
  P.route = "table/" + T.multiplier.method;
  return P;
}

ProfileData profile_data(const StructuredGroup& G) {
  ProfileData P;
  P.name = G.name;
  P.order = G.order();
  auto S = structured_profile(G);
  P.ordinary = degrees_abelian_normal(G);
  P.abelian = P.ordinary.blocks() == P.order;
  check_invariant(!S.types.empty() && S.types[0] == P.ordinary, "untwisted class does not give the group algebra");
  P.multiplier = S.multiplier.orders;
  P.types = std::move(S.types);
  P.route = "structured";
  return P;
}

std::string ConditionMatrix::pattern() const {
  std::string s;
  auto put = [&](char c, bool v) {
    if (!s.empty()) s += ' ';
    if (!v) s += '!';
    s += c;
  };
  put('A', A);
  put('B', B);
  put('C', C);
  put('D', D);
  return s;
}

namespace {

ConditionMatrix raw_conditions(const ProfileData& G, const ProfileData& H) {
  ConditionMatrix M;
  M.A = G.ordinary == H.ordinary;
  M.evidence.push_back({'A', M.A, G.ordinary.to_string() + " vs " + H.ordinary.to_string()});
  M.B = G.multiplier == H.multiplier;
  M.evidence.push_back({'B', M.B, list(G.multiplier) + " vs " + list(H.multiplier)});
  auto cg = G.cover(), ch = H.cover();
  M.C = cg == ch;
  M.evidence.push_back({'C', M.C, cg.to_string() + " vs " + ch.to_string()});
  auto mg = G.type_multiset(), mh = H.type_multiset();
  M.D = mg == mh;
  std::string d;
  if (M.D) {
    d = std::to_string(mg.size()) + " types agree";
  } else if (mg.size() != mh.size()) {
    d = std::to_string(mg.size()) + " vs " + std::to_string(mh.size()) + " classes";
  } else {
    std::vector<WedderburnType> only;
    std::set_difference(mg.begin(), mg.end(), mh.begin(), mh.end(), std::back_inserter(only));
    d = "only in " + G.name + ": " + only.front().to_string();
  }
  M.evidence.push_back({'D', M.D, d});
  return M;
}

}  // namespace

ConditionMatrix conditions(const ProfileData& G, const ProfileData& H) {
  auto M = raw_conditions(G, H);
  check_invariant(!M.D || (M.A && M.C), "condition D without A and C for " + G.name + ", " + H.name);
  return M;
}

namespace {

std::size_t add_scaled(const ProfileData& P, std::size_t a, std::size_t b, std::uint64_t k) {
  auto ca = P.coords(a), cb = P.coords(b);
  for (std::size_t i = 0; i < ca.size(); ++i) ca[i] = (ca[i] + k * cb[i]) % P.multiplier[i];
  return P.index_of(ca);
}

struct PsiSearch {
  const ProfileData& G;
  const ProfileData& H;
  std::uint64_t budget;
  std::vector<std::size_t> gens;  // generator positions in search order
  std::vector<std::vector<std::size_t>> candidates;
  std::vector<std::size_t> chosen;
  std::uint64_t nodes = 0;

  bool run(std::size_t level, const std::vector<std::pair<std::size_t, std::size_t>>& span, std::vector<char>& used) {
    if (level == gens.size()) return true;
    const std::size_t g = gens[level];
    std::vector<std::uint64_t> unit(G.multiplier.size(), 0);
    unit[g] = 1;
    const std::size_t e = G.index_of(unit);
    const std::uint64_t d = G.multiplier[g];
    for (std::size_t y : candidates[level]) {
      if (++nodes > budget) throw Error(ErrorKind::SearchBudgetExceeded, "multiplier isomorphism search budget exhausted");
      if (used[y]) continue;
      std::vector<std::pair<std::size_t, std::size_t>> next = span;
      std::vector<std::size_t> marked;
      bool ok = true;
      for (std::uint64_t k = 1; k < d && ok; ++k)
        for (auto [x, px] : span) {
          const std::size_t gx = add_scaled(G, x, e, k), hy = add_scaled(H, px, y, k);
          if (used[hy] || G.types[gx] != H.types[hy]) {
            ok = false;
            break;
          }
          used[hy] = 1;
          marked.push_back(hy);
          next.emplace_back(gx, hy);
        }
      if (ok) {
        chosen[level] = y;
        if (run(level + 1, next, used)) return true;
      }
      for (auto h : marked) used[h] = 0;
    }
    return false;
  }
};

}  // namespace

EquivResult twisted_equivalent(const ProfileData& G, const ProfileData& H, const EquivOptions& opts) {
  EquivResult R;
  if (G.order != H.order) {
    R.reason = "orders differ";
    return R;
  }
  if (G.ordinary != H.ordinary) {
    R.reason = "group algebras differ: " + G.ordinary.to_string() + " vs " + H.ordinary.to_string();
    return R;
  }
  if (G.multiplier != H.multiplier) {
    R.reason = "multipliers differ: " + list(G.multiplier) + " vs " + list(H.multiplier);
    return R;
  }
  if (G.type_multiset() != H.type_multiset()) {
    R.reason = "twisted algebra multisets differ";
    return R;
  }
  std::map<std::pair<std::uint64_t, WedderburnType>, std::size_t> hg, hh;
  for (std::size_t i = 0; i < G.types.size(); ++i) ++hg[{G.class_order(i), G.types[i]}];
  for (std::size_t i = 0; i < H.types.size(); ++i) ++hh[{H.class_order(i), H.types[i]}];
  if (hg != hh) {
    R.reason = "twisted algebras by class order differ";
    return R;
  }
  PsiSearch S{G, H, opts.budget, {}, {}, {}, 0};
  S.gens.resize(G.multiplier.size());
  std::iota(S.gens.begin(), S.gens.end(), 0);
  std::stable_sort(S.gens.begin(), S.gens.end(),
                   [&](std::size_t a, std::size_t b) { return G.multiplier[a] > G.multiplier[b]; });
  for (auto g : S.gens) {
    std::vector<std::uint64_t> unit(G.multiplier.size(), 0);
    unit[g] = 1;
    const std::size_t e = G.index_of(unit);
    std::vector<std::size_t> c;
    for (std::size_t y = 0; y < H.types.size(); ++y)
      if (H.class_order(y) == G.multiplier[g] && H.types[y] == G.types[e]) c.push_back(y);
    S.candidates.push_back(std::move(c));
  }
  S.chosen.resize(S.gens.size());
  std::vector<char> used(H.types.size(), 0);
  used[0] = 1;
  if (G.types[0] != H.types[0]) {
    R.reason = "untwisted algebras differ";
    return R;
  }
  if (!S.run(0, {{0, 0}}, used)) {
    R.reason = "no multiplier isomorphism matches the twisted algebras";
    return R;
  }
  R.equivalent = true;
  R.psi.resize(S.gens.size());
  for (std::size_t l = 0; l < S.gens.size(); ++l) R.psi[S.gens[l]] = H.coords(S.chosen[l]);
  R.reason = "multiplier isomorphism found";
  auto M = conditions(G, H);
  check_invariant(M.A && M.B && M.C && M.D, "equivalent groups fail a necessary condition");
  return R;
}

namespace {

std::string bucket_key(const ProfileData& P) {
  std::ostringstream os;
  os << P.order << '|' << P.ordinary.to_string() << '|' << list(P.multiplier);
  for (const auto& t : P.type_multiset()) os << '|' << t.to_string();
  return os.str();
}

std::size_t find(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

EquivPartition classify(const std::vector<ProfileData>& groups, const ClassifyOptions& opts) {
  EquivPartition out;
  const std::size_t n = groups.size();
  for (const auto& g : groups) out.names.push_back(g.name);
  std::map<std::string, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < n; ++i) buckets[bucket_key(groups[i])].push_back(i);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& [key, members] : buckets)
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b) pairs.emplace_back(members[a], members[b]);
  std::sort(pairs.begin(), pairs.end());

  std::vector<EquivResult> results(pairs.size());
  std::vector<std::exception_ptr> errors(pairs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t; (t = next++) < pairs.size();) {
      try {
        results[t] = twisted_equivalent(groups[pairs[t].first], groups[pairs[t].second], opts.equiv);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(pairs.size())));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t t = 0; t < pairs.size(); ++t) {
    if (results[t].equivalent) {
      auto a = find(parent, pairs[t].first), b = find(parent, pairs[t].second);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    out.certificates.push_back({pairs[t].first, pairs[t].second, std::move(results[t])});
  }
  // Every pair inside a class must have been found equivalent directly.
  for (const auto& c : out.certificates)
    check_invariant(c.result.equivalent == (find(parent, c.first) == find(parent, c.second)),
                    "equivalence is not transitive on " + groups[c.first].name + ", " + groups[c.second].name);

  out.class_of.assign(n, 0);
  std::map<std::size_t, std::size_t> root_class;
  for (std::size_t i = 0; i < n; ++i) {
    auto r = find(parent, i);
    auto [it, fresh] = root_class.try_emplace(r, out.classes.size());
    if (fresh) out.classes.emplace_back();
    out.classes[it->second].push_back(i);
    out.class_of[i] = it->second;
  }
  return out;
}

AuditReport implication_audit(const std::vector<std::tuple<std::string, ProfileData, ProfileData>>& fixtures,
                              const std::vector<ProfileData>& all) {
  AuditReport R;
  for (const auto& [label, G, H] : fixtures) R.rows.push_back({label, G.name, H.name, raw_conditions(G, H)});
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (all[i].order != all[j].order) continue;
      ++R.pairs_checked;
      auto M = raw_conditions(all[i], all[j]);
      if (M.D && !(M.A && M.C)) R.violations.emplace_back(i, j);
    }
  return R;
}

CentralTypeSurvey central_type_survey(const std::vector<ProfileData>& groups) {
  CentralTypeSurvey S;
  for (std::size_t i = 0; i < groups.size(); ++i)
    if (groups[i].central_type()) S.members.push_back(i);
  for (std::size_t a = 0; a < S.members.size(); ++a)
    for (std::size_t b = a + 1; b < S.members.size(); ++b) {
      const auto& G = groups[S.members[a]];
      const auto& H = groups[S.members[b]];
      if (G.order != H.order) continue;
      auto M = conditions(G, H);
      if (M.A && M.B) S.pairs_ab.emplace_back(S.members[a], S.members[b]);
      if (M.C) S.pairs_c.emplace_back(S.members[a], S.members[b]);
    }
  return S;
}

}  // namespace tgr
