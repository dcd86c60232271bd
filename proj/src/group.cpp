#include "tgr/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <sstream>

namespace tgr {

struct FiniteGroup::Impl {
  std::size_t n = 1;
  std::vector<Elem> table{0};
  std::vector<Elem> inverse{0};
  std::vector<std::string> labels;
  std::string name;
  GroupStructure structure;
  bool abelian = true;
};

bool Subgroup::contains(Elem g) const {
  return std::binary_search(members.begin(), members.end(), g);
}

namespace {

std::shared_ptr<FiniteGroup::Impl> trivial_impl() {
  static auto impl = [] {
    auto p = std::make_shared<FiniteGroup::Impl>();
    p->structure.classes = {{0}};
    p->structure.class_of = {0};
    p->structure.center.members = {0};
    p->structure.derived.members = {0};
    p->structure.centralizers = {Subgroup{{0}}};
    p->structure.element_order = {1};
    return p;
  }();
  return impl;
}

void invalid(const std::string& what) { throw Error(ErrorKind::InvalidGroup, what); }

}  // namespace

FiniteGroup::FiniteGroup() : FiniteGroup(trivial_impl()) {}

FiniteGroup::FiniteGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {
  n_ = impl_->n;
  table_ = impl_->table.data();
  inverse_ = impl_->inverse.data();
}

std::size_t FiniteGroup::order() const { return n_; }

std::string FiniteGroup::label(Elem g) const {
  if (g < impl_->labels.size()) return impl_->labels[g];
  return std::to_string(g);
}

bool FiniteGroup::has_labels() const { return !impl_->labels.empty(); }

const std::string& FiniteGroup::name() const { return impl_->name; }

FiniteGroup FiniteGroup::renamed(std::string name) const {
  auto copy = std::make_shared<Impl>(*impl_);
  copy->name = std::move(name);
  return FiniteGroup(std::move(copy));
}

const GroupStructure& FiniteGroup::structure() const { return impl_->structure; }

bool FiniteGroup::is_abelian() const { return impl_->abelian; }

Elem FiniteGroup::pow(Elem g, std::int64_t k) const {
  std::int64_t ord = elem_order(g);
  k %= ord;
  if (k < 0) k += ord;
  Elem r = 0, b = g;
  while (k) {
    if (k & 1) r = mul(r, b);
    b = mul(b, b);
    k >>= 1;
  }
  return r;
}

Elem FiniteGroup::commutator(Elem x, Elem y) const {
  return mul(mul(inv(x), inv(y)), mul(x, y));
}

Elem FiniteGroup::conj(Elem x, Elem y) const { return mul(mul(inv(y), x), y); }

namespace {

Subgroup closure(std::size_t n, const Elem* table, std::span<const Elem> gens) {
  std::vector<char> in(n, 0);
  std::vector<Elem> members{0};
  in[0] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    Elem x = members[i];
    for (Elem s : gens) {
      Elem y = table[static_cast<std::size_t>(x) * n + s];
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return Subgroup{std::move(members)};
}

void compute_structure(FiniteGroup::Impl& g) {
  const std::size_t n = g.n;
  const Elem* T = g.table.data();
  auto mul = [&](Elem a, Elem b) { return T[static_cast<std::size_t>(a) * n + b]; };
  GroupStructure& st = g.structure;

  st.element_order.assign(n, 1);
  std::uint64_t expo = 1;
  for (Elem x = 0; x < n; ++x) {
    Elem y = x;
    std::uint32_t k = 1;
    while (y != 0) {
      y = mul(y, x);
      ++k;
    }
    st.element_order[x] = k;
    expo = std::lcm(expo, static_cast<std::uint64_t>(k));
  }
  st.exponent = static_cast<std::uint32_t>(expo);

  g.abelian = true;
  for (Elem a = 0; a < n && g.abelian; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (mul(a, b) != mul(b, a)) {
        g.abelian = false;
        break;
      }

  st.class_of.assign(n, UINT32_MAX);
  st.classes.clear();
  st.centralizers.clear();
  std::vector<char> seen(n);
  for (Elem x = 0; x < n; ++x) {
    if (st.class_of[x] != UINT32_MAX) continue;
    std::uint32_t id = static_cast<std::uint32_t>(st.classes.size());
    std::vector<Elem> cls;
    std::vector<Elem> cent;
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem y = 0; y < n; ++y) {
      Elem c = mul(mul(g.inverse[y], x), y);
      if (c == x) cent.push_back(y);
      if (!seen[c]) {
        seen[c] = 1;
        cls.push_back(c);
        st.class_of[c] = id;
      }
    }
    std::sort(cls.begin(), cls.end());
    st.classes.push_back(std::move(cls));
    st.centralizers.push_back(Subgroup{std::move(cent)});
  }

  st.center.members.clear();
  for (const auto& c : st.classes)
    if (c.size() == 1) st.center.members.push_back(c.front());
  std::sort(st.center.members.begin(), st.center.members.end());

  if (g.abelian) {
    st.derived.members = {0};
  } else {
    std::vector<char> is_comm(n, 0);
    std::vector<Elem> comms;
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        Elem c = mul(mul(g.inverse[a], g.inverse[b]), mul(a, b));
        if (!is_comm[c]) {
          is_comm[c] = 1;
          comms.push_back(c);
        }
      }
    st.derived = closure(n, T, comms);
  }
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::size_t n, std::vector<Elem> table,
                                    std::vector<std::string> labels, std::string name) {
  if (n == 0) invalid("group order must be positive");
  if (table.size() != n * n) invalid("table has wrong size");
  for (Elem v : table)
    if (v >= n) invalid("table entry out of range");
  auto T = [&](Elem a, Elem b) { return table[static_cast<std::size_t>(a) * n + b]; };
  for (Elem g = 0; g < n; ++g)
    if (T(0, g) != g || T(g, 0) != g) invalid("element 0 is not the identity");

  std::vector<char> seen(n);
  for (Elem a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem b = 0; b < n; ++b) {
      if (seen[T(a, b)]) invalid("row " + std::to_string(a) + " is not a permutation");
      seen[T(a, b)] = 1;
    }
  }
  for (Elem b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem a = 0; a < n; ++a) {
      if (seen[T(a, b)]) invalid("column " + std::to_string(b) + " is not a permutation");
      seen[T(a, b)] = 1;
    }
  }

  std::vector<Elem> inverse(n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (T(a, b) == 0) {
        inverse[a] = b;
        break;
      }
  for (Elem a = 0; a < n; ++a)
    if (T(inverse[a], a) != 0) invalid("left and right inverses differ");

  auto assoc_fail = [&](Elem a, Elem b, Elem c) {
    return T(T(a, b), c) != T(a, T(b, c));
  };
  if (n <= 256) {
    for (Elem a = 1; a < n; ++a)
      for (Elem b = 1; b < n; ++b) {
        Elem ab = T(a, b);
        for (Elem c = 1; c < n; ++c)
          if (T(ab, c) != T(a, T(b, c)))
            invalid("associativity fails at (" + std::to_string(a) + "," + std::to_string(b) +
                    "," + std::to_string(c) + ")");
      }
  } else {
    std::mt19937_64 rng(n);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
    const std::size_t samples = n * n;
    for (std::size_t i = 0; i < samples; ++i) {
      Elem a = pick(rng), b = pick(rng), c = pick(rng);
      if (assoc_fail(a, b, c)) invalid("associativity fails on a sampled triple");
    }
  }
  if (!labels.empty() && labels.size() != n) invalid("label count differs from order");

  auto impl = std::make_shared<Impl>();
  impl->n = n;
  impl->table = std::move(table);
  impl->inverse = std::move(inverse);
  impl->labels = std::move(labels);
  impl->name = std::move(name);
  compute_structure(*impl);
  return FiniteGroup(std::move(impl));
}

bool GroupHom::is_homomorphism() const {
  const std::size_t n = source.order();
  if (images.size() != n || images[0] != 0) return false;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (images[source.mul(a, b)] != target.mul(images[a], images[b])) return false;
  return true;
}

bool GroupHom::is_bijective() const {
  if (source.order() != target.order()) return false;
  std::vector<char> hit(target.order(), 0);
  for (Elem x : images) {
    if (x >= target.order() || hit[x]) return false;
    hit[x] = 1;
  }
  return true;
}

Subgroup generate_subgroup(const FiniteGroup& G, std::span<const Elem> gens) {
  return closure(G.order(), G.table().data(), gens);
}

Subgroup whole_group(const FiniteGroup& G) {
  Subgroup s;
  s.members.resize(G.order());
  std::iota(s.members.begin(), s.members.end(), 0);
  return s;
}

bool is_normal(const FiniteGroup& G, const Subgroup& N) {
  auto gens = generating_set(G);
  for (Elem x : N.members)
    for (Elem y : gens)
      if (!N.contains(G.conj(x, y))) return false;
  return true;
}

std::pair<FiniteGroup, std::vector<Elem>> subgroup_as_group(const FiniteGroup& G,
                                                            const Subgroup& H) {
  const std::size_t m = H.size();
  std::vector<Elem> emb = H.members;
  std::vector<Elem> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Elem p = G.mul(emb[i], emb[j]);
      auto it = std::lower_bound(emb.begin(), emb.end(), p);
      if (it == emb.end() || *it != p) invalid("subset is not closed under multiplication");
      table[i * m + j] = static_cast<Elem>(it - emb.begin());
    }
  std::vector<std::string> labels;
  if (G.has_labels())
    for (Elem e : emb) labels.push_back(G.label(e));
  return {FiniteGroup::from_table(m, std::move(table), std::move(labels)), std::move(emb)};
}

std::vector<Elem> generating_set(const FiniteGroup& G, const Subgroup& H) {
  std::vector<Elem> cand = H.members;
  std::stable_sort(cand.begin(), cand.end(), [&](Elem a, Elem b) {
    return G.elem_order(a) > G.elem_order(b);
  });
  std::vector<Elem> gens;
  Subgroup cur{{0}};
  for (Elem x : cand) {
    if (cur.size() == H.size()) break;
    if (cur.contains(x)) continue;
    gens.push_back(x);
    cur = generate_subgroup(G, gens);
  }
  return gens;
}

std::vector<Elem> generating_set(const FiniteGroup& G) {
  return generating_set(G, whole_group(G));
}

}  // namespace tgr
