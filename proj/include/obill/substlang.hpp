#pragma once

#include <map>
#include <string>
#include <vector>

#include "obill/billiard.hpp"
#include "obill/wordcomb.hpp"

namespace obill {

// letter a is +a, its inverse is -a; always kept reduced
using FreeWord = std::vector<int>;

FreeWord reduce(const FreeWord& w);
FreeWord free_word(const Word& w);
FreeWord free_inverse(const FreeWord& w);
FreeWord concat(const FreeWord& a, const FreeWord& b);
bool inverse_free(const FreeWord& w);
// throws std::invalid_argument if w still contains an inverse letter
Word to_word(const FreeWord& w);
// 2^-1 3 style, for messages
std::string format_free(const FreeWord& w);

struct Substitution {
  std::string name;
  std::map<int, FreeWord> images;

  FreeWord apply(const FreeWord& w) const;
  Word apply(const Word& w) const;
};

FreeWord apply(const Substitution& s, const FreeWord& w);
Word iterate(const Substitution& s, Word w, int times);

// sigma psi psi_t psi2 xi xi2 Phi psi_tilde xi_tilde beta_tilde chi_tilde
// alpha_car alpha_hex alpha_tria f theta
Substitution catalog(const std::string& name);
std::vector<std::string> catalog_names();

Word sigma_hat(const Word& w);  // 11 sigma(w) 11
Word Phi_hat(const Word& w);    // Phi(w) 2
Word chi_hat(const Word& w);    // chi~(w) 3
Word xi_hat(const Word& w);     // 222 xi~(w)
Word beta_hat(const Word& w);   // 23232 beta~(w)

Word sigma_fixed_prefix(std::size_t length);

// the generator families with every parameter <= depth
std::vector<Word> generator_set(int k, int depth);
// every generator whose period has length <= max_len
std::vector<Word> generators_within(int k, std::size_t max_len);

struct DecagonGenerators {
  std::vector<Word> words;
  std::vector<Word> undecodable;  // pentagon generators with a 3 that do not split into 32^m, m=1..5
};
// pentagon generators that visit U3, cut into theta blocks
DecagonGenerators decagon_generators(std::size_t max_penta_len);

struct LanguageBuild {
  std::size_t period_bound = 0;  // generators of period <= this were used
  std::size_t generator_count = 0;
  int doublings = 0;
  std::size_t undecodable = 0;
};
// generator language for k in {3,4,5,6,10}, period bound started at 3 n_max and
// doubled until L_{n_max} no longer changes
Language polygon_language(int k, int n_max, LanguageBuild* info = nullptr);

// F(v) for a word over the free group, F(a^-1) = F(a)^-1
PlaneIsometry free_word_map(const HatCellSet& cells, const FreeWord& w);

// ---- bispecial families of the pentagon ----

struct FamilyInfo {
  std::string id;
  Kind kind;
  bool uses_k, uses_n;
};
const std::vector<FamilyInfo>& family_table();

struct FamilyDescriptor {
  std::string id;
  Kind kind;
  int k = 0, n = 0;
  Word word;
};
Word family_word(const std::string& id, int k, int n);
// ordered by (length, id); only words of length <= max_len
std::vector<FamilyDescriptor> bispecial_families(const std::string& kind, std::size_t max_len);

}  // namespace obill
