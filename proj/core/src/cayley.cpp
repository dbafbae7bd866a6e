#include "nestree/cayley.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <string>

namespace nestree {

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  return parts;
}

int generator_index(const std::vector<GeneratorSymbol>& gens, char lower) {
  for (size_t i = 0; i < gens.size(); ++i)
    if (gens[i].symbol == lower) return static_cast<int>(i);
  return -1;
}

Word parse_word(const std::string& text, const std::vector<GeneratorSymbol>& gens) {
  Word w;
  size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (!std::isalpha(static_cast<unsigned char>(ch)))
      throw InputError("unexpected character '" + std::string(1, ch) + "' in relator " + text);
    const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    const int g = generator_index(gens, lower);
    if (g < 0) throw InputError("relator " + text + " uses undeclared generator " + std::string(1, lower));
    bool inverse = std::isupper(static_cast<unsigned char>(ch)) != 0;
    ++i;
    long exponent = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      bool negative = false;
      if (i < text.size() && text[i] == '-') {
        negative = true;
        ++i;
      }
      const size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw InputError("missing exponent in relator " + text);
      exponent = std::stol(text.substr(start, i - start));
      if (exponent > 1000) throw InputError("exponent too large in relator " + text);
      if (negative) inverse = !inverse;
    }
    for (long k = 0; k < exponent; ++k) w.push_back({g, inverse});
  }
  return w;
}

bool cancels(const Letter& a, const Letter& b, const std::vector<GeneratorSymbol>& gens) {
  if (a.generator != b.generator) return false;
  if (gens[static_cast<size_t>(a.generator)].involution) return true;
  return a.inverse != b.inverse;
}

Word reduce(Word w, const std::vector<GeneratorSymbol>& gens) {
  for (auto& l : w)
    if (gens[static_cast<size_t>(l.generator)].involution) l.inverse = false;
  Word out;
  for (const auto& l : w) {
    if (!out.empty() && cancels(out.back(), l, gens))
      out.pop_back();
    else
      out.push_back(l);
  }
  // Cyclic reduction keeps the normal closure unchanged.
  size_t lo = 0;
  size_t hi = out.size();
  while (hi - lo >= 2 && cancels(out[lo], out[hi - 1], gens)) {
    ++lo;
    --hi;
  }
  return Word(out.begin() + static_cast<std::ptrdiff_t>(lo), out.begin() + static_cast<std::ptrdiff_t>(hi));
}

void finalize(Presentation& p, std::vector<Word> raw) {
  for (auto& w : raw) {
    Word r = reduce(std::move(w), p.generators);
    if (!r.empty()) p.relators.push_back(std::move(r));
  }
}

Presentation parse_bracket(const std::string& s) {
  if (s.back() != '>') throw InputError("presentation missing closing '>'");
  const std::string body = s.substr(1, s.size() - 2);
  const auto bar = body.find('|');
  const std::string gens_text = body.substr(0, bar);
  const std::string rels_text = bar == std::string::npos ? std::string() : body.substr(bar + 1);
  Presentation p;
  for (const auto& g : split(gens_text, ',')) {
    if (g.size() != 1 || !std::islower(static_cast<unsigned char>(g[0])))
      throw InputError("generator must be a single lowercase letter: '" + g + "'");
    if (generator_index(p.generators, g[0]) >= 0) throw InputError("duplicate generator " + g);
    p.generators.push_back({g[0], false});
  }
  std::vector<Word> raw;
  if (!rels_text.empty()) {
    for (const auto& r : split(rels_text, ',')) {
      if (r.empty()) continue;
      Word w = parse_word(r, p.generators);
      if (w.size() == 2 && w[0].generator == w[1].generator && w[0].inverse == w[1].inverse) {
        p.generators[static_cast<size_t>(w[0].generator)].involution = true;
        continue;
      }
      raw.push_back(std::move(w));
    }
  }
  finalize(p, std::move(raw));
  return p;
}

Presentation parse_labeled(const std::string& s) {
  Presentation p;
  std::string gens_text;
  std::string rels_text;
  for (const auto& section : split(s, ';')) {
    if (section.empty()) continue;
    if (section.rfind("gens:", 0) == 0)
      gens_text = section.substr(5);
    else if (section.rfind("rels:", 0) == 0)
      rels_text = section.substr(5);
    else
      throw InputError("unknown presentation section '" + section + "'");
  }
  if (gens_text.empty()) throw InputError("presentation declares no generators");
  std::vector<Word> raw;
  size_t i = 0;
  while (i < gens_text.size()) {
    const char ch = gens_text[i];
    if (ch == ',') {
      ++i;
      continue;
    }
    if (!std::islower(static_cast<unsigned char>(ch)))
      throw InputError("generator must be a lowercase letter: '" + std::string(1, ch) + "'");
    if (generator_index(p.generators, ch) >= 0) throw InputError("duplicate generator " + std::string(1, ch));
    ++i;
    int order = 0;
    if (i < gens_text.size() && gens_text[i] == '(') {
      const auto close = gens_text.find(')', i);
      if (close == std::string::npos) throw InputError("unclosed '(' in generator list");
      const std::string num = gens_text.substr(i + 1, close - i - 1);
      if (num.empty() || !std::all_of(num.begin(), num.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw InputError("generator order must be a positive integer");
      order = std::stoi(num);
      if (order < 1) throw InputError("generator order must be positive");
      i = close + 1;
    }
    p.generators.push_back({ch, order == 2});
    if (order == 1 || order >= 3)
      raw.push_back(Word(static_cast<size_t>(order), Letter{static_cast<int>(p.generators.size()) - 1, false}));
  }
  if (!rels_text.empty())
    for (const auto& r : split(rels_text, ','))
      if (!r.empty()) raw.push_back(parse_word(r, p.generators));
  finalize(p, std::move(raw));
  return p;
}

}  // namespace

Presentation Presentation::parse(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw InputError("empty presentation");
  return s.front() == '<' ? parse_bracket(s) : parse_labeled(s);
}

std::string Presentation::word_to_string(const Word& w) const {
  std::string out;
  for (const auto& l : w) {
    const char c = generators[static_cast<size_t>(l.generator)].symbol;
    out.push_back(l.inverse ? static_cast<char>(std::toupper(static_cast<unsigned char>(c))) : c);
  }
  return out;
}

std::string Presentation::to_string() const {
  std::string out = "gens:";
  for (const auto& g : generators) {
    out.push_back(' ');
    out.push_back(g.symbol);
    if (g.involution) out += "(2)";
  }
  out += "; rels:";
  for (size_t i = 0; i < relators.size(); ++i) {
    out += i == 0 ? " " : ", ";
    out += word_to_string(relators[i]);
  }
  return out;
}

int Presentation::max_relator_length() const {
  int m = 0;
  for (const auto& r : relators) m = std::max(m, static_cast<int>(r.size()));
  return m;
}

namespace {

// Coset table over the trivial subgroup. Column 2g is right multiplication by
// generator g, column 2g+1 by its inverse; for involutions both columns alias
// column 2g.
class CosetTable {
 public:
  CosetTable(const Presentation& p, int radius, int cap) : radius_(radius), cap_(cap) {
    const int ng = static_cast<int>(p.generators.size());
    inverse_.resize(static_cast<size_t>(2 * ng));
    for (int g = 0; g < ng; ++g) {
      if (p.generators[static_cast<size_t>(g)].involution) {
        inverse_[static_cast<size_t>(2 * g)] = 2 * g;
        inverse_[static_cast<size_t>(2 * g + 1)] = 2 * g;
        columns_.push_back(2 * g);
      } else {
        inverse_[static_cast<size_t>(2 * g)] = 2 * g + 1;
        inverse_[static_cast<size_t>(2 * g + 1)] = 2 * g;
        columns_.push_back(2 * g);
        columns_.push_back(2 * g + 1);
      }
    }
    for (const auto& r : p.relators) {
      std::vector<int> cols;
      for (const auto& l : r) cols.push_back(column(p, l));
      relators_.push_back(std::move(cols));
    }
    new_coset(0);
  }

  static int column(const Presentation& p, const Letter& l) {
    if (p.generators[static_cast<size_t>(l.generator)].involution) return 2 * l.generator;
    return 2 * l.generator + (l.inverse ? 1 : 0);
  }

  void run() {
    // Coincidences can shorten distances, so depths are recomputed by BFS and
    // the filling pass repeats until no coset changes.
    long before = -1;
    while (before != changes_) {
      before = changes_;
      recompute_depths();
      for (int c = 0; c < size(); ++c) {
        if (!alive(c)) continue;
        for (const auto& r : relators_) {
          scan(c, r, /*fill=*/true);
          if (!alive(c)) break;
        }
        if (!alive(c) || depth_[static_cast<size_t>(c)] >= radius_) continue;
        for (int col : columns_)
          if (at(c, col) < 0) define(c, col);
      }
    }
    // Close the table under deductions that no longer need new cosets.
    before = -1;
    while (before != changes_) {
      before = changes_;
      for (int c = 0; c < size(); ++c) {
        for (const auto& r : relators_) {
          if (!alive(c)) break;
          scan(c, r, /*fill=*/false);
        }
      }
    }
  }

  int size() const { return static_cast<int>(parent_.size()); }
  bool alive(int c) const { return parent_[static_cast<size_t>(c)] == c; }
  int at(int c, int col) const { return table_[static_cast<size_t>(c)][static_cast<size_t>(col)]; }
  int depth(int c) const { return depth_[static_cast<size_t>(c)]; }
  const std::vector<int>& columns() const { return columns_; }

  bool complete() const {
    for (int c = 0; c < size(); ++c) {
      if (!alive(c)) continue;
      for (int col : columns_)
        if (at(c, col) < 0) return false;
    }
    return true;
  }

 private:
  int new_coset(int depth) {
    if (size() >= cap_)
      throw BudgetExceeded("Cayley enumeration exceeded the vertex cap of " + std::to_string(cap_) + " cosets");
    const int c = size();
    parent_.push_back(c);
    depth_.push_back(depth);
    table_.emplace_back(inverse_.size(), -1);
    return c;
  }

  void set(int c, int col, int d) {
    table_[static_cast<size_t>(c)][static_cast<size_t>(col)] = d;
    if (col % 2 == 0 && inverse_[static_cast<size_t>(col)] == col)
      table_[static_cast<size_t>(c)][static_cast<size_t>(col + 1)] = d;
  }
  void unset(int c, int col) { set(c, col, -1); }

  void recompute_depths() {
    std::vector<int> d(depth_.size(), -1);
    std::deque<int> queue{0};
    d[0] = 0;
    while (!queue.empty()) {
      const int c = queue.front();
      queue.pop_front();
      for (int col : columns_) {
        const int t = at(c, col);
        if (t >= 0 && d[static_cast<size_t>(t)] < 0) {
          d[static_cast<size_t>(t)] = d[static_cast<size_t>(c)] + 1;
          queue.push_back(t);
        }
      }
    }
    for (size_t c = 0; c < d.size(); ++c)
      if (d[c] >= 0) depth_[c] = d[c];
  }

  void define(int c, int col) {
    ++changes_;
    const int d = new_coset(depth(c) + 1);
    set(c, col, d);
    set(d, inverse_[static_cast<size_t>(col)], c);
  }

  int rep(int c) {
    int r = c;
    while (parent_[static_cast<size_t>(r)] != r) r = parent_[static_cast<size_t>(r)];
    while (parent_[static_cast<size_t>(c)] != r) {
      const int next = parent_[static_cast<size_t>(c)];
      parent_[static_cast<size_t>(c)] = r;
      c = next;
    }
    return r;
  }

  void merge(int a, int b, std::deque<int>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    const int keep = std::min(a, b);
    const int drop = std::max(a, b);
    parent_[static_cast<size_t>(drop)] = keep;
    depth_[static_cast<size_t>(keep)] = std::min(depth_[static_cast<size_t>(keep)], depth_[static_cast<size_t>(drop)]);
    queue.push_back(drop);
  }

  void coincidence(int a, int b) {
    ++changes_;
    std::deque<int> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      const int dead = queue.front();
      queue.pop_front();
      for (int col : columns_) {
        const int target = at(dead, col);
        if (target < 0) continue;
        const int inv = inverse_[static_cast<size_t>(col)];
        unset(target, inv);
        const int mu = rep(dead);
        const int nu = rep(target);
        if (at(mu, col) >= 0) {
          merge(nu, at(mu, col), queue);
        } else if (at(nu, inv) >= 0) {
          merge(mu, at(nu, inv), queue);
        } else {
          set(mu, col, nu);
          set(nu, inv, mu);
        }
      }
    }
  }

  // Traces relator r from coset c in both directions; closes one-letter gaps
  // by deduction, equal endpoints by coincidence, and with `fill` defines new
  // cosets from any coset still inside the enumeration radius.
  void scan(int c, const std::vector<int>& r, bool fill) {
    int f = c;
    int b = c;
    int i = 0;
    int j = static_cast<int>(r.size()) - 1;
    while (true) {
      while (i <= j && at(f, r[static_cast<size_t>(i)]) >= 0) {
        f = at(f, r[static_cast<size_t>(i)]);
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && at(b, inverse_[static_cast<size_t>(r[static_cast<size_t>(j)])]) >= 0) {
        b = at(b, inverse_[static_cast<size_t>(r[static_cast<size_t>(j)])]);
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        ++changes_;
        const int col = r[static_cast<size_t>(i)];
        set(f, col, b);
        set(b, inverse_[static_cast<size_t>(col)], f);
        return;
      }
      if (!fill) return;
      if (depth(f) < radius_) {
        define(f, r[static_cast<size_t>(i)]);
      } else if (depth(b) < radius_) {
        define(b, inverse_[static_cast<size_t>(r[static_cast<size_t>(j)])]);
      } else {
        return;
      }
    }
  }

  int radius_;
  int cap_;
  long changes_ = 0;
  std::vector<int> inverse_;
  std::vector<int> columns_;
  std::vector<std::vector<int>> relators_;
  std::vector<int> parent_;
  std::vector<int> depth_;
  std::vector<std::vector<int>> table_;
};

}  // namespace

int LabeledBall::follow(int from, const Word& w) const {
  int v = from;
  for (const auto& l : w) {
    const int col = CosetTable::column(presentation, l);
    v = step[static_cast<size_t>(v)][static_cast<size_t>(col)];
    if (v < 0) return -1;
  }
  return v;
}

LabeledBall cayley_ball(const Presentation& p, int radius, const CayleyOptions& opts) {
  if (radius < 0) throw InputError("radius must be nonnegative");
  if (p.generators.empty()) throw InputError("presentation has no generators");
  CosetTable table(p, radius, opts.vertex_cap);
  table.run();

  // Renumber live cosets in BFS order from the identity.
  const int ng = static_cast<int>(p.generators.size());
  std::vector<int> order;
  std::vector<int> index(static_cast<size_t>(table.size()), -1);
  std::vector<int> depth;
  std::vector<Word> words;
  index[0] = 0;
  order.push_back(0);
  depth.push_back(0);
  words.emplace_back();
  for (size_t k = 0; k < order.size(); ++k) {
    const int c = order[k];
    for (int g = 0; g < ng; ++g) {
      for (int inv = 0; inv < 2; ++inv) {
        if (inv == 1 && p.generators[static_cast<size_t>(g)].involution) continue;
        const int d = table.at(c, 2 * g + inv);
        if (d < 0 || index[static_cast<size_t>(d)] >= 0) continue;
        index[static_cast<size_t>(d)] = static_cast<int>(order.size());
        order.push_back(d);
        depth.push_back(depth[k] + 1);
        Word w = words[k];
        w.push_back({g, inv == 1});
        words.push_back(std::move(w));
      }
    }
  }

  LabeledBall ball;
  ball.presentation = p;
  ball.radius = radius;
  ball.complete = table.complete();
  ball.exact_radius = ball.complete ? radius : std::max(0, radius - p.max_relator_length());
  ball.depth = depth;
  ball.words = std::move(words);

  const int n = static_cast<int>(order.size());
  ball.step.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(2 * ng), -1));
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::set<std::pair<int, int>> seen;
  for (int v = 0; v < n; ++v) {
    const int c = order[static_cast<size_t>(v)];
    for (int g = 0; g < ng; ++g) {
      for (int inv = 0; inv < 2; ++inv) {
        const int d = table.at(c, 2 * g + inv);
        if (d >= 0) ball.step[static_cast<size_t>(v)][static_cast<size_t>(2 * g + inv)] = index[static_cast<size_t>(d)];
      }
      const int w = ball.step[static_cast<size_t>(v)][static_cast<size_t>(2 * g)];
      if (w < 0 || w == v) continue;
      const auto key = std::make_pair(std::min(v, w), std::max(v, w));
      if (!seen.insert(key).second) continue;
      edges.push_back(key);
      ball.edge_generator.push_back(g);
    }
  }
  ball.graph = Graph::with_vertices(n, edges);
  return ball;
}

std::vector<PartialTranslation> partial_translations(const LabeledBall& b) {
  std::vector<PartialTranslation> out;
  if (b.exact_radius == 0) return out;
  const int n = b.graph.num_vertices();
  for (int g = 0; g < n; ++g) {
    if (!b.exact(g)) continue;
    PartialTranslation t;
    t.element = g;
    t.map.image.assign(static_cast<size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
      if (!b.exact(v)) continue;
      const int w = b.follow(g, b.words[static_cast<size_t>(v)]);
      if (w >= 0 && b.exact(w)) t.map.image[static_cast<size_t>(v)] = w;
    }
    out.push_back(std::move(t));
  }
  return out;
}

Graph coset_subgraph(const LabeledBall& b, const std::vector<int>& generators) {
  const int n = b.graph.num_vertices();
  VertexSet reached(n);
  std::vector<int> stack{0};
  reached.set(0);
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int g : generators)
      for (int inv = 0; inv < 2; ++inv) {
        const int w = b.step[static_cast<size_t>(v)][static_cast<size_t>(2 * g + inv)];
        if (w >= 0 && !reached.test(w)) {
          reached.set(w);
          stack.push_back(w);
        }
      }
  }
  return b.graph.induced(reached);
}

}  // namespace nestree
