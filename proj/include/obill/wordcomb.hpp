#pragma once

#include <cstddef>
#include <string>
#include <unordered_set>
#include <vector>

#include "obill/errors.hpp"

namespace obill {

// letters are the digit characters '0'..'9'
using Word = std::string;

enum class Kind { strong, weak, neutral, ordinary };
const char* kind_name(Kind k);

class Language {
 public:
  // factors of z^omega for every generator z
  static Language from_periodic(const std::vector<Word>& generators, int n_max);
  // factors of finite words, e.g. sampled codings; not necessarily extendable
  static Language from_words(const std::vector<Word>& words, int n_max);

  int n_max() const { return static_cast<int>(levels_.size()) - 1; }
  // sorted
  const std::vector<Word>& level(int n) const;
  bool contains(const Word& w) const;
  std::string alphabet() const;

  std::vector<Word> generators;
  std::string provenance;

 private:
  void finish();
  std::vector<std::vector<Word>> levels_;
  std::vector<std::unordered_set<Word>> sets_;
};

std::size_t complexity(const Language& L, int n);
// s(n) = p(n+1) - p(n)
long s_function(const Language& L, int n);

struct BispecialReport {
  Word v;
  int ml = 0, mr = 0, mb = 0;
  int index = 0;  // mb - mr - ml + 1
  Kind kind = Kind::ordinary;
};

BispecialReport bispecial_report(const Language& L, const Word& v);
// every bispecial word of length n, sorted
std::vector<BispecialReport> bispecial_scan(const Language& L, int n);
long b_function(const Language& L, int n);

struct CassaigneRow {
  int n;
  long s_n, s_next, b;
  bool ok() const { return s_next - s_n == b; }
};
std::vector<CassaigneRow> check_cassaigne(const Language& L, int lo, int hi);

// v_i = u_{i+1} - u_i mod k, which must fall in 1..(k+1)/2
Word difference_word(const Word& u, int k);

// one line per word: length<TAB>word
std::string export_levels(const Language& L);
// n,p,s,b with s and b left empty where the depth does not allow them
std::string export_table(const Language& L, char sep = ',');

}  // namespace obill
