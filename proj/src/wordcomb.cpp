#include "obill/wordcomb.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace obill {

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::strong: return "strong";
    case Kind::weak: return "weak";
    case Kind::neutral: return "neutral";
    case Kind::ordinary: return "ordinary";
  }
  return "?";
}

Language Language::from_periodic(const std::vector<Word>& generators, int n_max) {
  if (generators.empty() || n_max < 1) throw std::invalid_argument("from_periodic: empty generators or n_max < 1");
  Language L;
  L.generators = generators;
  L.provenance = "periodic";
  L.levels_.resize(n_max + 1);
  std::unordered_set<Word> top;
  for (const auto& z : generators) {
    if (z.empty()) throw std::invalid_argument("empty generator");
    Word rep;
    while (rep.size() < z.size() + n_max) rep += z;
    for (std::size_t i = 0; i < z.size(); ++i) top.insert(rep.substr(i, n_max));
  }
  L.levels_[n_max].assign(top.begin(), top.end());
  // a periodic word's shorter factors are prefixes/suffixes of its longer ones
  for (int n = n_max - 1; n >= 0; --n) {
    std::unordered_set<Word> cur;
    for (const auto& w : L.levels_[n + 1]) {
      cur.insert(w.substr(0, n));
      cur.insert(w.substr(1));
    }
    L.levels_[n].assign(cur.begin(), cur.end());
  }
  L.finish();
  return L;
}

Language Language::from_words(const std::vector<Word>& words, int n_max) {
  Language L;
  L.provenance = "sampled";
  L.levels_.resize(n_max + 1);
  std::vector<std::unordered_set<Word>> sets(n_max + 1);
  sets[0].insert("");
  for (const auto& w : words)
    for (int n = 1; n <= n_max && n <= static_cast<int>(w.size()); ++n)
      for (std::size_t i = 0; i + n <= w.size(); ++i) sets[n].insert(w.substr(i, n));
  for (int n = 0; n <= n_max; ++n) L.levels_[n].assign(sets[n].begin(), sets[n].end());
  L.finish();
  return L;
}

void Language::finish() {
  sets_.clear();
  for (auto& lv : levels_) {
    std::sort(lv.begin(), lv.end());
    sets_.emplace_back(lv.begin(), lv.end());
  }
}

const std::vector<Word>& Language::level(int n) const {
  if (n < 0 || n > n_max()) throw OutOfRange("length " + std::to_string(n) + " beyond n_max " + std::to_string(n_max()));
  return levels_[n];
}

bool Language::contains(const Word& w) const {
  if (static_cast<int>(w.size()) > n_max()) throw OutOfRange("word longer than n_max");
  return sets_[w.size()].count(w) > 0;
}

std::string Language::alphabet() const {
  std::string a;
  if (n_max() >= 1)
    for (const auto& w : levels_[1]) a += w;
  return a;
}

std::size_t complexity(const Language& L, int n) { return L.level(n).size(); }

long s_function(const Language& L, int n) {
  if (n + 1 > L.n_max()) throw InsufficientDepth("s(" + std::to_string(n) + ") needs length " + std::to_string(n + 1));
  return static_cast<long>(complexity(L, n + 1)) - static_cast<long>(complexity(L, n));
}

namespace {

Kind classify(int ml, int mr, int index) {
  if (ml < 2 || mr < 2) return Kind::ordinary;
  if (index > 0) return Kind::strong;
  if (index < 0) return Kind::weak;
  return Kind::neutral;
}

void need_depth(const Language& L, int n) {
  if (n + 2 > L.n_max())
    throw InsufficientDepth("bispecial data for length " + std::to_string(n) + " needs n_max >= " +
                            std::to_string(n + 2));
}

}  // namespace

BispecialReport bispecial_report(const Language& L, const Word& v) {
  const int n = static_cast<int>(v.size());
  need_depth(L, n);
  if (!L.contains(v)) throw std::invalid_argument("word not in language: " + v);
  BispecialReport r;
  r.v = v;
  const std::string alpha = L.alphabet();
  for (char a : alpha) {
    if (L.contains(a + v)) ++r.ml;
    if (L.contains(v + a)) ++r.mr;
    for (char b : alpha)
      if (L.contains(a + v + b)) ++r.mb;
  }
  r.index = r.mb - r.mr - r.ml + 1;
  r.kind = classify(r.ml, r.mr, r.index);
  return r;
}

std::vector<BispecialReport> bispecial_scan(const Language& L, int n) {
  need_depth(L, n);
  std::unordered_map<Word, int> ml, mr, mb;
  for (const auto& w : L.level(n + 1)) {
    ++ml[w.substr(1)];
    ++mr[w.substr(0, n)];
  }
  for (const auto& w : L.level(n + 2)) ++mb[w.substr(1, n)];
  std::vector<BispecialReport> out;
  for (const auto& v : L.level(n)) {
    int l = ml[v], r = mr[v];
    if (l < 2 || r < 2) continue;
    BispecialReport rep;
    rep.v = v;
    rep.ml = l;
    rep.mr = r;
    rep.mb = mb[v];
    rep.index = rep.mb - r - l + 1;
    rep.kind = classify(l, r, rep.index);
    out.push_back(rep);
  }
  return out;
}

long b_function(const Language& L, int n) {
  long b = 0;
  for (const auto& r : bispecial_scan(L, n)) b += r.index;
  return b;
}

std::vector<CassaigneRow> check_cassaigne(const Language& L, int lo, int hi) {
  if (hi + 2 > L.n_max()) throw InsufficientDepth("Cassaigne check up to " + std::to_string(hi) + " needs n_max >= " +
                                                  std::to_string(hi + 2));
  std::vector<CassaigneRow> rows;
  for (int n = lo; n <= hi; ++n) rows.push_back({n, s_function(L, n), s_function(L, n + 1), b_function(L, n)});
  return rows;
}

Word difference_word(const Word& u, int k) {
  if (u.size() < 2) throw InvalidDifference("need at least two letters");
  const int j = (k + 1) / 2;
  Word v;
  for (std::size_t i = 0; i + 1 < u.size(); ++i) {
    int a = u[i] - '0', b = u[i + 1] - '0';
    if (a < 0 || a >= k || b < 0 || b >= k) throw InvalidDifference("letter outside 0..k-1 in " + u);
    int d = ((b - a) % k + k) % k;
    if (d < 1 || d > j) throw InvalidDifference("difference " + std::to_string(d) + " at position " + std::to_string(i));
    v += static_cast<char>('0' + d);
  }
  return v;
}

std::string export_levels(const Language& L) {
  std::ostringstream os;
  for (int n = 0; n <= L.n_max(); ++n)
    for (const auto& w : L.level(n)) os << n << '\t' << w << '\n';
  return os.str();
}

std::string export_table(const Language& L, char sep) {
  std::ostringstream os;
  os << "n" << sep << "p" << sep << "s" << sep << "b" << '\n';
  for (int n = 0; n <= L.n_max(); ++n) {
    os << n << sep << complexity(L, n) << sep;
    if (n + 1 <= L.n_max()) os << s_function(L, n);
    os << sep;
    if (n + 2 <= L.n_max()) os << b_function(L, n);
    os << '\n';
  }
  return os.str();
}

}  // namespace obill
