#include "obill/substlang.hpp"

#include <algorithm>
#include <sstream>

namespace obill {

FreeWord reduce(const FreeWord& w) {
  FreeWord out;
  for (int a : w) {
    if (a == 0) throw UnknownLetter("letter 0 in free word");
    if (!out.empty() && out.back() == -a)
      out.pop_back();
    else
      out.push_back(a);
  }
  return out;
}

FreeWord free_word(const Word& w) {
  FreeWord out;
  for (char c : w) {
    if (c < '1' || c > '9') throw UnknownLetter(std::string("not a letter: ") + c);
    out.push_back(c - '0');
  }
  return out;
}

FreeWord free_inverse(const FreeWord& w) {
  FreeWord out(w.rbegin(), w.rend());
  for (int& a : out) a = -a;
  return out;
}

FreeWord concat(const FreeWord& a, const FreeWord& b) {
  FreeWord out = a;
  out.insert(out.end(), b.begin(), b.end());
  return reduce(out);
}

bool inverse_free(const FreeWord& w) {
  return std::all_of(w.begin(), w.end(), [](int a) { return a > 0; });
}

Word to_word(const FreeWord& w) {
  Word s;
  for (int a : w) {
    if (a < 0) throw std::invalid_argument("inverse letter left after reduction: " + format_free(w));
    s += static_cast<char>('0' + a);
  }
  return s;
}

std::string format_free(const FreeWord& w) {
  std::ostringstream os;
  for (int a : w) {
    if (a > 0)
      os << a;
    else
      os << -a << "^-1 ";
  }
  return os.str();
}

FreeWord Substitution::apply(const FreeWord& w) const {
  FreeWord out;
  for (int a : w) {
    auto it = images.find(a > 0 ? a : -a);
    if (it == images.end()) throw UnknownLetter(name + " has no image for " + std::to_string(a > 0 ? a : -a));
    const FreeWord img = a > 0 ? it->second : free_inverse(it->second);
    for (int b : img) {
      if (!out.empty() && out.back() == -b)
        out.pop_back();
      else
        out.push_back(b);
    }
  }
  return out;
}

Word Substitution::apply(const Word& w) const { return to_word(apply(free_word(w))); }

FreeWord apply(const Substitution& s, const FreeWord& w) { return s.apply(w); }

Word iterate(const Substitution& s, Word w, int times) {
  for (int i = 0; i < times; ++i) w = s.apply(w);
  return w;
}

namespace {

Substitution make(const std::string& name, std::map<int, FreeWord> im) { return {name, std::move(im)}; }

FreeWord fw(const Word& w) { return free_word(w); }

}  // namespace

std::vector<std::string> catalog_names() {
  return {"sigma",      "psi",        "psi_t",    "psi2",      "xi",         "xi2",
          "Phi",        "psi_tilde",  "xi_tilde", "beta_tilde", "chi_tilde", "alpha_car",
          "alpha_hex",  "alpha_tria", "f",        "theta"};
}

Substitution catalog(const std::string& name) {
  if (name == "sigma") return make(name, {{1, fw("1121211")}, {2, fw("111")}, {3, fw("3")}});
  if (name == "psi") return make(name, {{1, fw("2232232")}, {2, fw("232")}, {3, {-2}}});
  // the form that satisfies F(psi_t(v)) t = t F(v) letter by letter
  if (name == "psi_t") return make(name, {{1, fw("2223223")}, {2, fw("223")}, {3, {-3, -2, 3}}});
  // 2^-1 psi(a) 2
  if (name == "psi2") return make(name, {{1, fw("2322322")}, {2, fw("322")}, {3, {-2}}});
  if (name == "xi") return make(name, {{1, fw("23222")}, {2, fw("2")}, {3, fw("3")}});
  if (name == "xi2") return make(name, {{1, fw("32222")}, {2, fw("2")}});
  if (name == "Phi") return make(name, {{1, fw("1")}, {2, fw("2")}, {3, fw("23")}});
  if (name == "psi_tilde") return make(name, {{1, fw("23232")}, {2, fw("32")}, {3, fw("3")}});
  if (name == "xi_tilde") return make(name, {{1, fw("3222")}, {2, fw("2")}});
  if (name == "beta_tilde") return make(name, {{1, fw("23232")}, {2, fw("32")}});
  if (name == "chi_tilde") return make(name, {{2, fw("32")}, {3, fw("3")}});
  if (name == "alpha_car") return make(name, {{1, fw("12")}, {2, fw("2")}});
  if (name == "alpha_hex") return make(name, {{2, fw("23")}, {3, fw("3")}});
  if (name == "alpha_tria") return make(name, {{1, fw("121")}, {2, {-1}}});
  if (name == "f") return make(name, {{1, fw("2111")}, {2, fw("211")}, {3, fw("21")}});
  if (name == "theta")
    return make(name, {{1, fw("322222")}, {2, fw("32222")}, {3, fw("3222")}, {4, fw("322")}, {5, fw("32")}});
  throw UnknownSubstitution("no substitution named " + name);
}

Word sigma_hat(const Word& w) {
  static const Substitution s = catalog("sigma");
  return "11" + s.apply(w) + "11";
}
Word Phi_hat(const Word& w) {
  static const Substitution s = catalog("Phi");
  return s.apply(w) + "2";
}
Word chi_hat(const Word& w) {
  static const Substitution s = catalog("chi_tilde");
  return s.apply(w) + "3";
}
Word xi_hat(const Word& w) {
  static const Substitution s = catalog("xi_tilde");
  return "222" + s.apply(w);
}
Word beta_hat(const Word& w) {
  static const Substitution s = catalog("beta_tilde");
  return "23232" + s.apply(w);
}

Word sigma_fixed_prefix(std::size_t length) {
  if (length < 1) throw std::invalid_argument("length >= 1");
  static const Substitution s = catalog("sigma");
  Word w = "1";
  while (w.size() < length) w = s.apply(w);
  return w.substr(0, length);
}

namespace {

// 1 decoded, 0 no letter 3, -1 does not split into blocks 32^m with m = 1..5
int theta_decode(const Word& z, Word* dec) {
  auto pos = z.find('3');
  if (pos == Word::npos) return 0;
  Word r = z.substr(pos) + z.substr(0, pos);
  dec->clear();
  for (std::size_t i = 0; i < r.size();) {
    std::size_t j = i + 1;
    while (j < r.size() && r[j] == '2') ++j;
    std::size_t m = j - i - 1;
    if (r[i] != '3' || m < 1 || m > 5 || (j < r.size() && r[j] != '3')) return -1;
    *dec += static_cast<char>('0' + 6 - static_cast<int>(m));
    i = j;
  }
  return 1;
}

Word power(const Word& w, int n) {
  Word out;
  for (int i = 0; i < n; ++i) out += w;
  return out;
}

// parametrised families; a family stops once its words exceed max_len,
// or once the parameter passes depth
std::vector<Word> generators(int k, int depth, std::size_t max_len) {
  std::vector<Word> out;
  auto add = [&](const Word& w) {
    if (w.size() <= max_len) out.push_back(w);
  };
  switch (k) {
    case 4:
      for (int n = 0; n <= depth && static_cast<std::size_t>(n) + 1 <= max_len; ++n) add("1" + Word(n, '2'));
      break;
    case 6:
      add("1");
      for (int n = 0; n <= depth && static_cast<std::size_t>(n) + 1 <= max_len; ++n) {
        add("2" + Word(n, '3'));
        add("2" + Word(n, '3') + "2" + Word(n + 1, '3'));
      }
      break;
    case 3:
      for (int n = 0; n <= depth && static_cast<std::size_t>(2 * n + 1) <= max_len; ++n) {
        add("1" + power("21", n));
        add("1" + power("21", n) + "1" + power("21", n + 1));
      }
      break;
    case 5: {
      const Substitution sigma = catalog("sigma"), psi = catalog("psi"), xi = catalog("xi");
      std::vector<Word> bases;
      Word s1 = "1", s12 = "12";
      for (int n = 0; n <= depth && s1.size() <= max_len; ++n) {
        bases.push_back(s1);
        bases.push_back(s12);
        bases.push_back(xi.apply(s1));
        bases.push_back(xi.apply(s12));
        s1 = sigma.apply(s1);
        s12 = sigma.apply(s12);
      }
      bases.push_back("2");
      bases.push_back("2223");
      for (const auto& b : bases) {
        Word w = b;
        for (int m = 0; m <= depth && w.size() <= max_len; ++m) {
          add(w);
          w = psi.apply(w);
        }
      }
      break;
    }
    case 10: {
      Word dec;
      // a decagon letter stands for at most six pentagon letters
      std::size_t penta_len = max_len > (std::size_t(1) << 40) ? max_len : 6 * max_len;
      for (const auto& z : generators(5, depth, penta_len))
        if (theta_decode(z, &dec) == 1) add(dec);
      break;
    }
    default:
      throw UnsupportedPolygon("no generator set for k=" + std::to_string(k));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<Word> generator_set(int k, int depth) { return generators(k, depth, static_cast<std::size_t>(-1) / 8); }

std::vector<Word> generators_within(int k, std::size_t max_len) { return generators(k, 1 << 20, max_len); }

DecagonGenerators decagon_generators(std::size_t max_penta_len) {
  DecagonGenerators out;
  Word dec;
  for (const auto& z : generators_within(5, max_penta_len)) {
    int r = theta_decode(z, &dec);
    if (r == 1)
      out.words.push_back(dec);
    else if (r == -1)
      out.undecodable.push_back(z);
  }
  std::sort(out.words.begin(), out.words.end());
  out.words.erase(std::unique(out.words.begin(), out.words.end()), out.words.end());
  return out;
}

Language polygon_language(int k, int n_max, LanguageBuild* info) {
  std::size_t bound = 3 * static_cast<std::size_t>(n_max);
  auto gens_for = [&](std::size_t b, std::size_t* undecodable) {
    if (k != 10) return generators_within(k, b);
    DecagonGenerators d = decagon_generators(b);
    if (undecodable) *undecodable = d.undecodable.size();
    return d.words;
  };
  std::size_t und = 0;
  std::vector<Word> gens = gens_for(bound, &und);
  Language L = Language::from_periodic(gens, n_max);
  int doublings = 0;
  for (;;) {
    std::vector<Word> more = gens_for(2 * bound, &und);
    Language L2 = Language::from_periodic(more, n_max);
    ++doublings;
    bool same = L2.level(n_max) == L.level(n_max);
    bound *= 2;
    gens = std::move(more);
    L = std::move(L2);
    if (same) break;
    if (doublings > 12) throw InsufficientDepth("generator language did not stabilise");
  }
  if (info) {
    info->period_bound = bound;
    info->generator_count = gens.size();
    info->doublings = doublings;
    info->undecodable = und;
  }
  L.provenance = "generators k=" + std::to_string(k);
  return L;
}

PlaneIsometry free_word_map(const HatCellSet& cells, const FreeWord& w) {
  PlaneIsometry m = PlaneIsometry::identity(cells.cells.at(0).map.n_root());
  for (int a : w) {
    const PlaneIsometry& f = cells.by_label(a > 0 ? a : -a).map;
    m = compose(a > 0 ? f : f.inverse(), m);
  }
  return m;
}

// ---- families ----

const std::vector<FamilyInfo>& family_table() {
  static const std::vector<FamilyInfo> t = {
      {"eps", Kind::strong, false, false},
      {"2", Kind::neutral, false, false},
      {"chi(2222)", Kind::weak, true, false},
      {"chi(22322)", Kind::weak, true, false},
      {"chi(232232)", Kind::weak, true, false},
      {"chi(2323232)", Kind::weak, true, false},
      {"chi.xi(z)", Kind::weak, true, true},
      {"chi.xi(t)", Kind::weak, true, true},
      {"chi.beta(z)", Kind::weak, true, true},
      {"chi.beta(t)", Kind::weak, true, true},
      {"z", Kind::weak, false, true},
      {"t", Kind::weak, false, true},
      {"chi(2)", Kind::strong, true, false},
      {"chi(22)", Kind::strong, true, false},
      {"chi(222)", Kind::strong, true, false},
      {"chi(232)", Kind::strong, true, false},
      {"chi(23232)", Kind::strong, true, false},
      {"chi(3)", Kind::strong, true, false},
      {"chi.xi(x)", Kind::strong, true, true},
      {"chi.xi(y)", Kind::strong, true, true},
      {"chi.beta(x)", Kind::strong, true, true},
      {"chi.beta(y)", Kind::strong, true, true},
      {"x", Kind::strong, false, true},
      {"y", Kind::strong, false, true},
  };
  return t;
}

namespace {

Word base_seed(char c) {
  switch (c) {
    case 'x': return "1";
    case 'y': return "1111";
    case 'z': return "12121";
    case 't': return "1111111";
  }
  throw std::invalid_argument(std::string("no base word ") + c);
}

Word base_word(char c, int n) {
  Word w = base_seed(c);
  for (int i = 0; i < n; ++i) w = sigma_hat(w);
  return w;
}

Word chi_power(Word w, int k) {
  for (int i = 0; i < k; ++i) w = chi_hat(w);
  return w;
}

}  // namespace

Word family_word(const std::string& id, int k, int n) {
  if (id == "eps") return "";
  if (id == "2") return "2";
  if (id.size() == 1) return base_word(id[0], n);
  if (id.rfind("chi(", 0) == 0) return Phi_hat(chi_power(id.substr(4, id.size() - 5), k));
  if (id.rfind("chi.xi(", 0) == 0) return Phi_hat(chi_power(xi_hat(base_word(id[7], n)), k));
  if (id.rfind("chi.beta(", 0) == 0) return Phi_hat(chi_power(beta_hat(base_word(id[9], n)), k));
  throw std::invalid_argument("unknown family " + id);
}

std::vector<FamilyDescriptor> bispecial_families(const std::string& kind, std::size_t max_len) {
  if (kind != "strong" && kind != "weak" && kind != "all") throw std::invalid_argument("kind is strong, weak or all");
  std::vector<FamilyDescriptor> out;
  for (const auto& f : family_table()) {
    if (kind == "strong" && f.kind != Kind::strong) continue;
    if (kind == "weak" && f.kind != Kind::weak) continue;
    for (int n = 0; n == 0 || f.uses_n; ++n) {
      if (family_word(f.id, 0, n).size() > max_len) break;
      for (int k = 0; k == 0 || f.uses_k; ++k) {
        Word w = family_word(f.id, k, n);
        if (w.size() > max_len) break;
        out.push_back({f.id, f.kind, k, n, w});
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const FamilyDescriptor& a, const FamilyDescriptor& b) {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    return a.id < b.id;
  });
  return out;
}

}  // namespace obill
