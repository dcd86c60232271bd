#include "tgr/presentation.hpp"

#include <algorithm>
#include <cctype>

namespace tgr {

namespace {

[[noreturn]] void parse_fail(std::string_view text, std::size_t pos, const std::string& what) {
  throw Error(ErrorKind::ParseError,
              "word \"" + std::string(text) + "\" column " + std::to_string(pos + 1) + ": " + what);
}

Word inverse(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (int& x : r) x = -x;
  return r;
}

Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Word power(const Word& w, long k) {
  Word base = k < 0 ? inverse(w) : w;
  Word r;
  for (long i = 0; i < std::labs(k); ++i) r.insert(r.end(), base.begin(), base.end());
  return r;
}

Word free_reduce(const Word& w) {
  Word r;
  for (int x : w) {
    if (!r.empty() && r.back() == -x)
      r.pop_back();
    else
      r.push_back(x);
  }
  return r;
}

class WordParser {
 public:
  WordParser(std::string_view gens, std::string_view text, CommutatorConvention conv)
      : gens_(gens), text_(text), conv_(conv) {}

  Word parse_all() {
    Word w = word();
    skip();
    if (pos_ != text_.size()) parse_fail(text_, pos_, "unexpected character");
    return w;
  }

  Word word() {
    Word w;
    for (;;) {
      skip();
      if (pos_ >= text_.size()) break;
      char c = text_[pos_];
      if (c == ')' || c == ']' || c == ',' || c == '=') break;
      w = concat(std::move(w), factor());
    }
    return w;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != c)
      parse_fail(text_, pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  Word letter_word(char c) {
    auto i = gens_.find(c);
    if (i == std::string_view::npos) parse_fail(text_, pos_, std::string("unknown generator '") + c + "'");
    return Word{static_cast<int>(i) + 1};
  }

  Word atom() {
    skip();
    if (pos_ >= text_.size()) parse_fail(text_, pos_, "unexpected end of word");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Word w = word();
      expect(')');
      return w;
    }
    if (c == '[') {
      ++pos_;
      Word u = word();
      expect(',');
      Word v = word();
      expect(']');
      if (conv_ == CommutatorConvention::InverseFirst)
        return concat(concat(concat(inverse(u), inverse(v)), u), v);
      return concat(concat(concat(u, v), inverse(u)), inverse(v));
    }
    if (c == '1') {
      ++pos_;
      return {};
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      Word w = letter_word(c);
      ++pos_;
      return w;
    }
    parse_fail(text_, pos_, "unexpected character");
  }

  Word factor() {
    Word w = atom();
    for (;;) {
      skip();
      if (pos_ >= text_.size() || text_[pos_] != '^') break;
      ++pos_;
      skip();
      if (pos_ >= text_.size()) parse_fail(text_, pos_, "missing exponent");
      char c = text_[pos_];
      if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
        bool neg = c == '-';
        if (neg) ++pos_;
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) parse_fail(text_, pos_, "missing exponent digits");
        long k = std::stol(std::string(text_.substr(start, pos_ - start)));
        if (k > 100000) parse_fail(text_, start, "exponent too large");
        w = power(w, neg ? -k : k);
      } else {
        Word y = atom();
        w = concat(concat(inverse(y), w), y);
      }
    }
    return w;
  }

  std::string_view gens_;
  std::string_view text_;
  CommutatorConvention conv_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view generators, std::string_view text, CommutatorConvention conv) {
  return free_reduce(WordParser(generators, text, conv).parse_all());
}

Word parse_relator(std::string_view generators, std::string_view text, CommutatorConvention conv) {
  auto eq = text.find('=');
  if (eq == std::string_view::npos) return parse_word(generators, text, conv);
  Word lhs = parse_word(generators, text.substr(0, eq), conv);
  Word rhs = parse_word(generators, text.substr(eq + 1), conv);
  return free_reduce(concat(lhs, inverse(rhs)));
}

Elem evaluate_word(const FiniteGroup& G, std::span<const Elem> gen_images, const Word& w) {
  Elem r = 0;
  for (int x : w) {
    Elem g = gen_images[static_cast<std::size_t>(std::abs(x) - 1)];
    r = G.mul(r, x > 0 ? g : G.inv(g));
  }
  return r;
}

namespace {

// Coset enumeration over the trivial subgroup (HLT strategy with coincidence
// processing). Columns 2i and 2i+1 hold generator i and its inverse.
class CosetTable {
 public:
  CosetTable(std::size_t ngens, std::size_t limit) : cols_(2 * ngens), limit_(limit) { add_coset(); }

  void enumerate(const std::vector<std::vector<int>>& relators) {
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      for (const auto& r : relators) {
        if (!live(c)) break;
        scan_and_fill(static_cast<int>(c), r);
      }
      for (std::size_t x = 0; x < cols_ && live(c); ++x)
        if (get(static_cast<int>(c), x) < 0) define(static_cast<int>(c), x);
    }
  }

  // Compacts live cosets; returns their right-action table.
  std::vector<std::vector<int>> compact() const {
    std::vector<int> idx(parent_.size(), -1);
    int k = 0;
    for (std::size_t c = 0; c < parent_.size(); ++c)
      if (live(c)) idx[c] = k++;
    std::vector<std::vector<int>> out(static_cast<std::size_t>(k), std::vector<int>(cols_));
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (!live(c)) continue;
      for (std::size_t x = 0; x < cols_; ++x) out[static_cast<std::size_t>(idx[c])][x] = idx[rep(get(static_cast<int>(c), x))];
    }
    return out;
  }

  static std::size_t col(int letter) {
    return letter > 0 ? 2 * static_cast<std::size_t>(letter - 1) : 2 * static_cast<std::size_t>(-letter - 1) + 1;
  }
  static std::size_t inv_col(std::size_t x) { return x ^ 1u; }

 private:
  bool live(std::size_t c) const { return parent_[c] == static_cast<int>(c); }
  int get(int c, std::size_t x) const { return table_[static_cast<std::size_t>(c) * cols_ + x]; }
  void set(int c, std::size_t x, int v) { table_[static_cast<std::size_t>(c) * cols_ + x] = v; }

  int add_coset() {
    if (parent_.size() >= limit_)
      throw Error(ErrorKind::SizeBound, "coset enumeration exceeded its coset limit");
    int c = static_cast<int>(parent_.size());
    parent_.push_back(c);
    table_.insert(table_.end(), cols_, -1);
    return c;
  }

  void define(int c, std::size_t x) {
    int d = add_coset();
    set(c, x, d);
    set(d, inv_col(x), c);
  }

  int rep(int c) const {
    int r = c;
    while (parent_[static_cast<std::size_t>(r)] != r) r = parent_[static_cast<std::size_t>(r)];
    return r;
  }

  int rep_compress(int c) {
    int r = rep(c);
    while (parent_[static_cast<std::size_t>(c)] != r) {
      int next = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = r;
      c = next;
    }
    return r;
  }

  void merge(int a, int b, std::vector<int>& queue) {
    a = rep_compress(a);
    b = rep_compress(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    queue.push_back(b);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      int g = queue[i];
      for (std::size_t x = 0; x < cols_; ++x) {
        int d = get(g, x);
        if (d < 0) continue;
        set(d, inv_col(x), -1);
        int mu = rep_compress(g), nu = rep_compress(d);
        if (get(mu, x) >= 0) {
          merge(nu, get(mu, x), queue);
        } else if (get(nu, inv_col(x)) >= 0) {
          merge(mu, get(nu, inv_col(x)), queue);
        } else {
          set(mu, x, nu);
          set(nu, inv_col(x), mu);
        }
      }
    }
  }

  void scan_and_fill(int c, const std::vector<int>& w) {
    if (w.empty()) return;
    int f = c, b = c;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    for (;;) {
      while (i <= j && get(f, col(w[static_cast<std::size_t>(i)])) >= 0) {
        f = get(f, col(w[static_cast<std::size_t>(i)]));
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && get(b, inv_col(col(w[static_cast<std::size_t>(j)]))) >= 0) {
        b = get(b, inv_col(col(w[static_cast<std::size_t>(j)])));
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        std::size_t x = col(w[static_cast<std::size_t>(i)]);
        set(f, x, b);
        set(b, inv_col(x), f);
        return;
      }
      define(f, col(w[static_cast<std::size_t>(i)]));
    }
  }

  std::size_t cols_;
  std::size_t limit_;
  std::vector<int> parent_;
  std::vector<int> table_;
};

std::string word_label(std::string_view gens, const std::vector<int>& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    s += gens[static_cast<std::size_t>(w[i] - 1)];
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

}  // namespace

PresentedGroup from_presentation(std::string_view generators,
                                 const std::vector<std::string>& relations,
                                 std::size_t expected_order, std::string name,
                                 PresentationOptions opts) {
  const std::size_t k = generators.size();
  std::vector<Word> relators;
  std::vector<std::size_t> source;
  for (std::size_t i = 0; i < relations.size(); ++i) {
    Word w = parse_relator(generators, relations[i], opts.conv);
    if (w.empty()) continue;
    relators.push_back(std::move(w));
    source.push_back(i);
  }
  CosetTable ct(k, opts.coset_limit);
  ct.enumerate(relators);
  auto act = ct.compact();
  const std::size_t n = act.size();

  // Breadth-first numbering by positive generators gives shortest labels.
  std::vector<int> number(n, -1);
  std::vector<int> order_of{0};
  std::vector<std::vector<int>> words(n);
  std::vector<std::pair<int, int>> via(n, {-1, -1});  // (previous coset, generator)
  number[0] = 0;
  for (std::size_t i = 0; i < order_of.size(); ++i) {
    int c = order_of[i];
    for (std::size_t g = 0; g < k; ++g) {
      int d = act[static_cast<std::size_t>(c)][2 * g];
      if (number[static_cast<std::size_t>(d)] >= 0) continue;
      number[static_cast<std::size_t>(d)] = static_cast<int>(order_of.size());
      order_of.push_back(d);
      words[static_cast<std::size_t>(d)] = words[static_cast<std::size_t>(c)];
      words[static_cast<std::size_t>(d)].push_back(static_cast<int>(g) + 1);
      via[static_cast<std::size_t>(d)] = {c, static_cast<int>(g)};
    }
  }
  if (order_of.size() != n)
    throw Error(ErrorKind::RelationCheckFailed, "presentation: generators do not reach every coset");

  // table[x][y]: apply the word of y to coset x.
  std::vector<Elem> table(n * n);
  for (std::size_t xi = 0; xi < n; ++xi) {
    int x = order_of[xi];
    std::vector<int> prod(n, -1);
    prod[0] = x;
    for (std::size_t yi = 1; yi < n; ++yi) {
      int y = order_of[yi];
      auto [prev, g] = via[static_cast<std::size_t>(y)];
      int p = prod[static_cast<std::size_t>(number[static_cast<std::size_t>(prev)])];
      prod[yi] = act[static_cast<std::size_t>(p)][2 * static_cast<std::size_t>(g)];
    }
    for (std::size_t yi = 0; yi < n; ++yi)
      table[xi * n + yi] = static_cast<Elem>(number[static_cast<std::size_t>(prod[yi])]);
  }
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = word_label(generators, words[static_cast<std::size_t>(order_of[i])]);

  PresentedGroup out;
  out.group = FiniteGroup::from_table(n, std::move(table), std::move(labels), std::move(name));
  for (std::size_t g = 0; g < k; ++g)
    out.generators.push_back(static_cast<Elem>(number[static_cast<std::size_t>(act[0][2 * g])]));
  for (std::size_t r = 0; r < relators.size(); ++r)
    if (evaluate_word(out.group, out.generators, relators[r]) != 0)
      throw Error(ErrorKind::RelationCheckFailed, "relation \"" + relations[source[r]] + "\" fails on the table");
  if (n != expected_order)
    throw Error(ErrorKind::RelationCheckFailed,
                "presentation defines a group of order " + std::to_string(n) + ", expected " +
                    std::to_string(expected_order));
  return out;
}

}  // namespace tgr
