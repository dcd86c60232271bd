#include "tgr/catalog.hpp"

#include <algorithm>
#include <map>

#include "tgr/error.hpp"

namespace tgr {

namespace {

using U = std::uint64_t;

U ipow(U b, U e) {
  U r = 1;
  while (e--) r *= b;
  return r;
}

U powmod(U b, U e, U m) {
  U r = 1 % m;
  b %= m;
  for (; e; e >>= 1, b = b * b % m)
    if (e & 1) r = r * b % m;
  return r;
}

CatalogEntry presented(std::string id, std::string desc, std::size_t order, std::string gens,
                       std::vector<std::string> rels, CommutatorConvention conv = CommutatorConvention::InverseFirst) {
  CatalogEntry e;
  e.id = std::move(id);
  e.description = std::move(desc);
  e.order = order;
  e.generators = std::move(gens);
  e.relations = std::move(rels);
  e.convention = conv;
  return e;
}

CatalogEntry abelian(std::string id, std::vector<U> inv) {
  CatalogEntry e;
  e.id = std::move(id);
  e.order = 1;
  for (auto d : inv) e.order *= d;
  std::string desc;
  for (auto d : inv) desc += (desc.empty() ? "C" : " x C") + std::to_string(d);
  e.description = desc.empty() ? "trivial" : desc;
  e.abelian = std::move(inv);
  return e;
}

CatalogEntry quotient_entry(std::string id, std::string desc, std::size_t order, std::string of,
                            std::vector<std::string> kernel) {
  CatalogEntry e;
  e.id = std::move(id);
  e.description = std::move(desc);
  e.order = order;
  e.quotient_of = std::move(of);
  e.kernel = std::move(kernel);
  return e;
}

CatalogEntry structured_entry(std::string id, std::string desc, StructuredGroup g) {
  CatalogEntry e;
  e.id = std::move(id);
  e.description = std::move(desc);
  g.name = e.id;
  e.order = g.order();
  e.structured = std::move(g);
  return e;
}

void add_order16(std::vector<CatalogEntry>& out) {
  const auto L = CommutatorConvention::InverseLast;
  out.push_back(abelian("order16-i", {16}));
  out.push_back(abelian("order16-ii", {2, 8}));
  out.push_back(abelian("order16-iii", {4, 4}));
  out.push_back(abelian("order16-iv", {2, 2, 4}));
  out.push_back(abelian("order16-v", {2, 2, 2, 2}));
  out.push_back(presented("order16-vi", "modular group M16", 16, "ab", {"a^8", "b^2", "a b a^-1 = b a^4"}, L));
  out.push_back(presented("order16-vii", "Pauli group", 16, "abc", {"a^4", "b^2", "c^2", "[a,b]", "[a,c]", "[b,c] = a^2"}, L));
  out.push_back(presented("order16-viii", "C4 : C4", 16, "ab", {"a^4", "b^4", "[a,b] = a^2"}, L));
  out.push_back(presented("order16-ix", "D8 x C2", 16, "abc", {"a^4", "b^2", "c^2", "[a,b]", "[b,c]", "[a,c] = a^2"}, L));
  out.push_back(presented("order16-x", "(C4 x C2) : C2", 16, "abc", {"a^4", "b^2", "c^2", "[a,b]", "[b,c]", "[a,c] = b"}, L));
  out.push_back(presented("order16-xi", "Q8 x C2", 16, "abc", {"a^4", "c^2", "a^2 = b^2", "[a,c]", "[b,c]", "[a,b] = a^2"}, L));
  out.push_back(presented("order16-xii", "D16", 16, "ab", {"a^8", "b^2", "[a,b] = a^2"}, L));
  out.push_back(presented("order16-xiii", "SD16", 16, "ab", {"a^8", "b^2", "[a,b] = a^6"}, L));
  out.push_back(presented("order16-xiv", "Q16", 16, "ab", {"a^8", "b^2 = a^4", "[a,b] = a^2"}, L));
}

void add_p4(std::vector<CatalogEntry>& out, U p) {
  const std::string at = "@" + std::to_string(p);
  const std::string ps = std::to_string(p), p2 = std::to_string(p * p), p3 = std::to_string(p * p * p);
  const std::size_t n = ipow(p, 4);
  auto id = [&](const char* row) { return std::string("p4-") + row + at; };
  out.push_back(abelian(id("i"), {n}));
  out.push_back(abelian(id("ii"), {p, p * p * p}));
  out.push_back(abelian(id("iii"), {p * p, p * p}));
  out.push_back(abelian(id("iv"), {p, p, p * p}));
  out.push_back(abelian(id("v"), {p, p, p, p}));
  out.push_back(presented(id("vi"), "", n, "ab", {"a^" + p3, "b^" + ps, "a b a^-1 = b a^" + p2}));
  out.push_back(presented(id("vii"), "", n, "abc", {"a^" + p2, "b^" + ps, "c^" + ps, "[a,b]", "[a,c]", "[b,c] = a^" + ps}));
  out.push_back(presented(id("viii"), "", n, "ab", {"a^" + p2, "b^" + p2, "[a,b] = a^" + ps}));
  out.push_back(presented(id("ix"), "", n, "abc", {"a^" + p2, "b^" + ps, "c^" + ps, "[a,b]", "[b,c]", "[a,c] = a^" + ps}));
  out.push_back(presented(id("x"), "", n, "abc", {"a^" + p2, "b^" + ps, "c^" + ps, "[a,b]", "[b,c]", "[a,c] = b"}));
  if (p == 3) {
    out.push_back(presented(id("xi"), "", n, "abc", {"a^9", "b^3", "c^3", "[b,c]", "[a,b] = a^3", "[a,c] = b a^3"}));
    out.push_back(presented(id("xii"), "", n, "abc", {"a^9", "b^3", "c^3 = a^3", "[b,c]", "[a,b] = a^3", "[c,a] = b a^3"}));
    out.push_back(presented(id("xiii"), "", n, "abc", {"a^9", "b^3", "c^3 = a^6", "[b,c]", "[a,b] = a^3", "[c,a] = b a^3"}));
  } else {
    U alpha = 2;
    while (powmod(alpha, (p - 1) / 2, p) == 1) ++alpha;
    const std::string ap = std::to_string(alpha * p);
    out.push_back(presented(id("xi"), "", n, "abc", {"a^" + p2, "b^" + ps, "c^" + ps, "[b,c]", "[a,b] = a^" + ps, "a c = c a b"}));
    out.push_back(presented(id("xii"), "", n, "abc", {"a^" + p2, "b^" + ps, "c^" + ps, "[b,c] = a^" + ps, "[a,b] = a^" + ps, "a c = c a b"}));
    out.push_back(presented(id("xiii"), "", n, "abc", {"a^" + p2, "b^" + ps, "c^" + ps, "[b,c] = a^" + ap, "[a,b] = a^" + ps, "a c = c a b"}));
  }
  out.push_back(presented(id("xiv"), "", n, "abcd",
                          {"a^" + ps, "b^" + ps, "c^" + ps, "d^" + ps, "[a,b]", "[a,c]", "[a,d]", "[b,c]", "[b,d]", "[c,d] = a"}));
  if (p == 3)
    out.push_back(presented(id("xv"), "", n, "abc", {"a^9", "b^3", "c^3", "[a,b]", "[a,c] = b a^3", "[b,c] = a^6"}));
  else
    out.push_back(presented(id("xv"), "", n, "abcd",
                            {"a^" + ps, "b^" + ps, "c^" + ps, "d^" + ps, "[a,b]", "[a,c]", "[a,d]", "[b,c]", "[d,b] = a", "[d,c] = b"}));
}

void add_section3(std::vector<CatalogEntry>& out) {
  out.push_back(presented("ex3.2-G", "Q8 x C2", 16, "abc", {"a^4", "b^2 = a^2", "a^b = a^-1", "c^2", "[a,c]", "[b,c]"}));
  out.push_back(presented("ex3.2-H", "(C4 x C2) : C2", 16, "abc", {"a^4", "b^2", "c^2", "[a,b]", "a^c = a b", "b^c = b"}));
  out.push_back(presented("ex3.3-S", "(C8 : C4) : C2", 64, "xyz",
                          {"x^8", "y^4", "z^2", "x^y = x^5", "x^z = x y^3", "y^z = y^3"}));
  out.push_back(presented("ex3.3-G", "(C8 : C2) : C2", 32, "abc", {"a^8", "b^2", "c^2", "a^b = a^5", "b^c = b", "a^c = a b"}));
  out.push_back(presented("ex3.3-H", "(C4 x C4) : C2", 32, "rst", {"r^4", "s^4", "t^2", "[r,s]", "r^t = r s^3", "s^t = s^3"}));
  out.back().quotient_of = "ex3.3-S";
  out.back().kernel = {"x^4"};
  out[out.size() - 2].quotient_of = "ex3.3-S";
  out[out.size() - 2].kernel = {"y^2"};
  out.push_back(presented("ex3.4-S", "((C16 : C4) x C2) : C2", 256, "xyzw",
                          {"x^16", "y^4", "z^2", "w^2", "x^y = x^13", "[x,z]", "[y,z]", "x^w = x y^2", "y^w = x^8 y z", "z^w = z"}));
  out.push_back(presented("ex3.4-G", "(C8 : C4) : C2", 64, "abc", {"a^8", "b^4", "c^2", "a^b = a^5", "b^c = b", "a^c = a b^2"}));
  out.back().quotient_of = "ex3.4-S";
  out.back().kernel = {"x^8", "z"};
  out.push_back(presented("ex3.4-H", "(C8 x C4) : C2", 64, "rst", {"r^8", "s^4", "t^2", "[r,s]", "r^t = r s^2", "s^t = r^4 s"}));
  out.back().quotient_of = "ex3.4-S";
  out.back().kernel = {"x^4 z"};
  out.push_back(quotient_entry("ex3.4-K", "S / <x^8>", 128, "ex3.4-S", {"x^8"}));
  out.push_back(presented("ex3.5-S", "((C8 : C8) x C2) : C2", 256, "xyzw",
                          {"x^8", "y^8", "z^2", "w^2", "x^y = x^-1", "[x,z]", "[y,z]", "x^w = x y^4 z", "y^w = y^5", "z^w = z"}));
  out.push_back(presented("ex3.5-G", "(C4 : C8) : C2", 64, "abc", {"a^4", "b^8", "c^2", "a^b = a^-1", "a^c = a b^4", "b^c = b^5"}));
  out.back().quotient_of = "ex3.5-S";
  out.back().kernel = {"x^4", "z"};
  out.push_back(presented("ex3.5-H", "(C4 : C8) : C2", 64, "rst", {"r^4", "s^8", "t^2", "r^s = r^-1", "r^t = r", "s^t = s^5"}));
  out.back().quotient_of = "ex3.5-S";
  out.back().kernel = {"x^4", "y^4 z"};
}

IntMatrix diag(U a, U b) { return {{a, 0}, {0, b}}; }

void add_ex45(std::vector<CatalogEntry>& out) {
  // zeta generates the order-9 subgroup of F_19^*; u9 has order 9 mod 361.
  const U zeta = 4;
  auto z = [&](U e) { return powmod(zeta, e, 19); };
  U u9 = 2;
  while (!(powmod(u9, 9, 361) == 1 && powmod(u9, 3, 361) != 1)) ++u9;
  const U u3 = powmod(u9, 3, 361);
  const IntMatrix I1{{1}}, I2 = diag(1, 1);
  auto g = [](U m, std::size_t r, std::vector<U> k, std::vector<IntMatrix> a) {
    return StructuredGroup{"", m, r, std::move(k), std::move(a)};
  };
  auto add = [&](int i, std::string desc, StructuredGroup s) {
    out.push_back(structured_entry("ex4.5-G" + std::to_string(i), std::move(desc), std::move(s)));
  };
  add(1, "C3249", g(361, 1, {9}, {I1}));
  add(2, "C361 x C3 x C3", g(361, 1, {3, 3}, {I1, I1}));
  add(3, "C19 x C19 x C9", g(19, 2, {9}, {I2}));
  add(4, "C19 x C19 x C3 x C3", g(19, 2, {3, 3}, {I2, I2}));
  add(5, "C361 : C9, action of order 3", g(361, 1, {9}, {{{u3}}}));
  add(6, "C361 : C9, faithful", g(361, 1, {9}, {{{u9}}}));
  const U pairs[8][2] = {{0, 3}, {3, 3}, {0, 1}, {1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 6}};
  for (int i = 0; i < 8; ++i) {
    auto desc = "(C19 x C19) : C9, d(z^" + std::to_string(pairs[i][0]) + ", z^" + std::to_string(pairs[i][1]) + ")";
    add(7 + i, desc, g(19, 2, {9}, {diag(z(pairs[i][0]), z(pairs[i][1]))}));
  }
  add(15, "C361 : (C3 x C3)", g(361, 1, {3, 3}, {{{u3}}, I1}));
  add(16, "(C19 x C19) : (C3 x C3), faithful", g(19, 2, {3, 3}, {diag(z(3), 1), diag(1, z(3))}));
  add(17, "(C19 x C19) : (C3 x C3), d(1, z^3)", g(19, 2, {3, 3}, {diag(1, z(3)), I2}));
  add(18, "(C19 x C19) : (C3 x C3), d(z^3, z^3)", g(19, 2, {3, 3}, {diag(z(3), z(3)), I2}));
  add(19, "(C19 x C19) : C9, d(z^3, z^6)", g(19, 2, {9}, {diag(z(3), z(6))}));
  add(20, "(C19 x C19) : C9, d(z, z^8)", g(19, 2, {9}, {diag(z(1), z(8))}));
  add(21, "(C19 x C19) : (C3 x C3), d(z^3, z^6)", g(19, 2, {3, 3}, {diag(z(3), z(6)), I2}));
}

// Entry-wise CRT of matrices given modulo 2, 5 and 7.
IntMatrix crt70(const IntMatrix& a2, const IntMatrix& a5, const IntMatrix& a7) {
  IntMatrix r(2, std::vector<U>(2));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (U v = 0; v < 70; ++v)
        if (v % 2 == a2[i][j] % 2 && v % 5 == a5[i][j] % 5 && v % 7 == a7[i][j] % 7) {
          r[i][j] = v;
          break;
        }
  return r;
}

void add_ex57(std::vector<CatalogEntry>& out) {
  const IntMatrix I = diag(1, 1), T2{{0, 1}, {1, 1}}, C5{{0, 4}, {1, 4}}, C7{{0, 6}, {1, 6}}, C7inv{{6, 1}, {6, 0}};
  const auto x = crt70(I, C5, C7);
  out.push_back(structured_entry("ex5.7-G", "(C70 x C70) : (C3 x C3), kernel <xy> on the 7-part",
                                 StructuredGroup{"", 70, 2, {3, 3}, {x, crt70(T2, I, C7inv)}}));
  out.push_back(structured_entry("ex5.7-H", "(C70 x C70) : (C3 x C3), kernel <x^2 y> on the 7-part",
                                 StructuredGroup{"", 70, 2, {3, 3}, {x, crt70(T2, I, C7)}}));
}

const std::vector<CatalogEntry>& registry() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    add_order16(out);
    add_p4(out, 3);
    add_p4(out, 5);
    add_section3(out);
    add_ex45(out);
    add_ex57(out);
    return out;
  }();
  return entries;
}

std::optional<std::vector<U>> parse_abelian_id(const std::string& id) {
  std::vector<U> factors;
  std::size_t pos = 0;
  while (pos < id.size()) {
    if (id[pos] != 'C') return std::nullopt;
    std::size_t end = id.find('x', pos);
    if (end == std::string::npos) end = id.size();
    const auto digits = id.substr(pos + 1, end - pos - 1);
    if (digits.empty() || digits.size() > 6 || !std::all_of(digits.begin(), digits.end(), ::isdigit)) return std::nullopt;
    const U d = std::stoull(digits);
    if (d == 0) return std::nullopt;
    factors.push_back(d);
    pos = end == id.size() ? end : end + 1;
    if (end + 1 == id.size()) return std::nullopt;
  }
  if (factors.empty()) return std::nullopt;
  return factors;
}

}  // namespace

std::vector<std::string> catalog_ids() {
  std::vector<std::string> ids;
  for (const auto& e : registry()) ids.push_back(e.id);
  return ids;
}

std::vector<std::string> catalog_family(const std::string& family) {
  std::string prefix, suffix;
  if (family == "order16") prefix = "order16-";
  else if (family == "p4@3" || family == "p4@5") prefix = "p4-", suffix = family.substr(2);
  else if (family == "ex4.5") prefix = "ex4.5-";
  else if (family == "ex5.7") prefix = "ex5.7-";
  else if (family == "section3") prefix = "ex3.";
  else throw Error(ErrorKind::UnknownId, "unknown catalog family '" + family + "'");
  std::vector<std::string> ids;
  for (const auto& e : registry())
    if (e.id.rfind(prefix, 0) == 0 && (suffix.empty() || e.id.ends_with(suffix))) ids.push_back(e.id);
  return ids;
}

bool is_catalog_id(const std::string& id) {
  if (parse_abelian_id(id)) return true;
  const auto& r = registry();
  return std::any_of(r.begin(), r.end(), [&](const CatalogEntry& e) { return e.id == id; });
}

CatalogEntry catalog_entry(const std::string& id) {
  for (const auto& e : registry())
    if (e.id == id) return e;
  if (auto f = parse_abelian_id(id)) {
    auto e = abelian(id, *f);
    e.id = id;
    return e;
  }
  throw Error(ErrorKind::UnknownId, "unknown group id '" + id + "'");
}

PresentedGroup presented_group(const std::string& id) {
  auto e = catalog_entry(id);
  if (e.generators.empty()) throw Error(ErrorKind::UnknownId, "'" + id + "' has no presentation");
  return from_presentation(e.generators, e.relations, e.order, e.id, PresentationOptions{e.convention});
}

FiniteGroup paper_group(const std::string& id, std::size_t bound) {
  auto e = catalog_entry(id);
  if (e.order > bound) throw Error(ErrorKind::SizeBound, "'" + id + "' is too large for a Cayley table");
  if (e.structured) return e.structured->materialize(bound);
  if (!e.generators.empty()) return presented_group(id).group;
  if (!e.quotient_of.empty()) {
    auto parent = catalog_entry(e.quotient_of);
    auto S = presented_group(e.quotient_of);
    std::vector<Elem> gens;
    for (const auto& w : e.kernel)
      gens.push_back(evaluate_word(S.group, S.generators, parse_word(parent.generators, w, parent.convention)));
    auto N = generate_subgroup(S.group, gens);
    auto Q = quotient(S.group, N).first;
    if (Q.order() != e.order) throw Error(ErrorKind::RelationCheckFailed, "'" + id + "' has the wrong order");
    return Q;
  }
  FiniteGroup G;
  for (auto d : e.abelian) G = direct_product(G, make_cyclic(d));
  return G;
}

StructuredGroup structured_group(const std::string& id) {
  auto e = catalog_entry(id);
  if (!e.structured) throw Error(ErrorKind::UnknownId, "'" + id + "' has no structured form");
  return *e.structured;
}

ProfileData catalog_profile(const std::string& id, const WedderburnOptions& opts) {
  auto e = catalog_entry(id);
  if (e.structured) return profile_data(*e.structured);
  return profile_data(paper_group(id), id, opts);
}

namespace {

WedderburnType type_of(std::vector<std::pair<U, U>> parts) {
  std::vector<U> degrees;
  for (auto [count, degree] : parts) degrees.insert(degrees.end(), count, degree);
  return WedderburnType::from_degrees(std::move(degrees));
}

const std::map<std::string, ExpectedFacts>& fact_table() {
  static const std::map<std::string, ExpectedFacts> table = [] {
    std::map<std::string, ExpectedFacts> t;
    auto put = [&](const std::string& id) -> ExpectedFacts& {
      auto& f = t[id];
      f.id = id;
      return f;
    };
    for (U n : {2, 3, 4, 6}) {
      put("C" + std::to_string(n)).multiplier = std::vector<U>{};
      put("C" + std::to_string(n) + "xC" + std::to_string(n)).multiplier = std::vector<U>{n};
    }
    auto& g32 = put("ex3.2-G");
    g32.multiplier = std::vector<U>{2, 2};
    g32.ordinary = type_of({{8, 1}, {2, 2}});
    g32.central_type = false;
    auto& h32 = put("ex3.2-H");
    h32.multiplier = std::vector<U>{2, 2};
    h32.ordinary = type_of({{8, 1}, {2, 2}});
    h32.central_type = true;
    put("ex3.3-S").center_order = 4;
    put("ex3.3-G").multiplier = std::vector<U>{2};
    put("ex3.3-G").ordinary = type_of({{8, 1}, {2, 2}, {1, 4}});
    put("ex3.3-H").multiplier = std::vector<U>{2};
    put("ex3.3-H").ordinary = type_of({{8, 1}, {6, 2}});
    put("ex3.4-S").center_order = 8;
    for (const char* id : {"ex3.4-G", "ex3.4-H"}) {
      auto& f = put(id);
      f.ordinary = type_of({{16, 1}, {12, 2}});
      f.twisted_contains = {type_of({{4, 4}})};
    }
    put("ex3.4-G").multiplier = std::vector<U>{2, 2};
    put("ex3.4-H").multiplier = std::vector<U>{4};
    put("ex3.5-S").center_order = 16;
    put("ex3.5-G").multiplier = std::vector<U>{2, 2};
    put("ex3.5-H").multiplier = std::vector<U>{2, 2};

    const std::vector<std::vector<U>> mult = {{},  {3}, {19}, {57}, {}, {}, {}, {},  {},  {},  {},
                                              {},  {},  {},  {3}, {3}, {3}, {3}, {19}, {19}, {57}};
    const auto abel = type_of({{3249, 1}});
    const auto t171_3 = type_of({{171, 1}, {342, 3}});
    const auto t171_9 = type_of({{171, 1}, {38, 9}});
    const auto t9_3 = type_of({{9, 1}, {360, 3}});
    const auto t9_9 = type_of({{9, 1}, {40, 9}});
    const auto t9_39 = type_of({{9, 1}, {18, 3}, {38, 9}});
    const auto t9_339 = type_of({{9, 1}, {36, 3}, {36, 9}});
    const std::vector<WedderburnType> ord = {abel,  abel,  abel,  abel,   t9_3,   t9_9, t171_3, t9_3, t171_9, t9_9, t9_9,
                                            t9_39, t9_9,  t9_39, t9_3,   t9_339, t171_3, t9_3, t9_3, t9_9,  t9_3};
    for (int i = 0; i < 21; ++i) {
      auto& f = put("ex4.5-G" + std::to_string(i + 1));
      f.multiplier = mult[i];
      f.ordinary = ord[i];
    }
    for (const char* id : {"ex5.7-G", "ex5.7-H"}) {
      auto& f = put(id);
      f.multiplier = std::vector<U>{210};
      f.ordinary = type_of({{9, 1}, {75, 3}, {536, 9}});
    }
    return t;
  }();
  return table;
}

}  // namespace

ExpectedFacts expected(const std::string& id) {
  auto& t = fact_table();
  auto it = t.find(id);
  if (it != t.end()) return it->second;
  if (!is_catalog_id(id)) throw Error(ErrorKind::UnknownId, "unknown group id '" + id + "'");
  return ExpectedFacts{id, {}, {}, {}, {}, {}};
}

ExpectedPartition expected_partition(const std::string& id) {
  ExpectedPartition P;
  P.id = id;
  if (id == "omega16-partition") {
    P.members = catalog_family("order16");
    P.classes = {{"order16-vii", "order16-xi"}, {"order16-xiii", "order16-xiv"}};
  } else if (id == "omega81-partition") {
    P.members = catalog_family("p4@3");
    P.classes = {{"p4-vii@3", "p4-ix@3", "p4-x@3"}, {"p4-xi@3", "p4-xii@3", "p4-xiii@3"}};
  } else if (id == "ex4.5-partition") {
    P.members = catalog_family("ex4.5");
    P.classes = {{"ex4.5-G5", "ex4.5-G8"},
                 {"ex4.5-G6", "ex4.5-G10", "ex4.5-G11", "ex4.5-G13"},
                 {"ex4.5-G12", "ex4.5-G14"},
                 {"ex4.5-G15", "ex4.5-G18"}};
  } else {
    throw Error(ErrorKind::UnknownId, "unknown partition id '" + id + "'");
  }
  return P;
}

std::vector<ExpectedPattern> expected_patterns() {
  return {{"A B !C", "ex3.2-G", "ex3.2-H", true, true, false, false},
          {"B C !A", "ex3.3-G", "ex3.3-H", false, true, true, false},
          {"A C D !B", "ex3.4-G", "ex3.4-H", true, false, true, true},
          {"A B C !D", "ex3.5-G", "ex3.5-H", true, true, true, false}};
}

}  // namespace tgr
