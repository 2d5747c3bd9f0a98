#ifndef SLAH_TESTS_SUPPORT_HPP
#define SLAH_TESTS_SUPPORT_HPP

#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace slah_tests {

inline std::string readFile(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot read " + path);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

inline std::string dataPath(const std::string& name) {
  return std::string(SLAH_TEST_DATA_DIR) + "/" + name;
}

// Random problem texts for the differential suites. Arithmetic instances
// use Real/Int sorts with small constants and simple theory atoms, finite
// instances use symbolic sorts only. The texts go through the normal
// parser; callers skip instances the pipeline rejects.
struct Generator {
  std::mt19937_64 rng;

  explicit Generator(unsigned long long seed) : rng(seed) {}

  int pick(int lo, int hi) {  // inclusive
    return static_cast<int>(std::uniform_int_distribution<int>(lo, hi)(rng));
  }
  bool chance(int percent) { return pick(1, 100) <= percent; }

  enum class Kind { Plain, Exists, Forall };

  struct Config {
    bool allFinite = false;
    Kind kind = Kind::Plain;
  };

  std::string instance(const Config& cfg) {
    std::ostringstream os;
    int nSorts = cfg.allFinite ? pick(1, 2) : 0;
    std::vector<std::vector<std::string>> members(nSorts);
    std::vector<std::string> sortNames;
    for (int s = 0; s < nSorts; ++s) {
      std::string sn = "F" + std::to_string(s);
      sortNames.push_back(sn);
      os << "sort " << sn << " = { ";
      int nm = pick(2, 3);
      for (int m = 0; m < nm; ++m) {
        std::string mn = "m" + std::to_string(s) + static_cast<char>('a' + m);
        members[s].push_back(mn);
        os << (m ? ", " : "") << mn;
      }
      os << " }.\n";
    }

    int nPreds = pick(1, 4);
    std::vector<int> arity(nPreds);
    std::vector<std::vector<int>> argSort(nPreds);  // index into sorts; -1 Real, -2 Int
    for (int p = 0; p < nPreds; ++p) {
      arity[p] = pick(0, 2);
      os << "pred P" << p << "(";
      for (int i = 0; i < arity[p]; ++i) {
        int s = cfg.allFinite ? pick(0, nSorts - 1) : (chance(30) ? -2 : -1);
        argSort[p].push_back(s);
        if (i) os << ", ";
        os << (s >= 0 ? sortNames[s] : (s == -2 ? "Int" : "Real"));
      }
      os << ").\n";
    }

    const char* vars[3] = {"x", "y", "z"};
    // Finite sort assigned to each variable within the current clause; a
    // variable may not appear at two different finite sorts.
    std::map<std::string, int> varSort;
    auto argFor = [&](int p, int i) -> std::string {
      int s = argSort[p][i];
      if (chance(30)) {
        if (s >= 0) return members[s][pick(0, static_cast<int>(members[s].size()) - 1)];
        return std::to_string(pick(-3, 3));
      }
      if (s < 0) return vars[pick(0, 2)];
      int start = pick(0, 2);
      for (int k = 0; k < 3; ++k) {
        const char* v = vars[(start + k) % 3];
        auto it = varSort.find(v);
        if (it == varSort.end()) {
          varSort[v] = s;
          return v;
        }
        if (it->second == s) return v;
      }
      return members[s][pick(0, static_cast<int>(members[s].size()) - 1)];
    };
    auto atomFor = [&](int p) {
      std::string s = "P" + std::to_string(p);
      if (arity[p] == 0) return s + "()";
      s += "(";
      for (int i = 0; i < arity[p]; ++i) s += (i ? ", " : "") + argFor(p, i);
      return s + ")";
    };

    int nClauses = pick(1, 8);
    for (int c = 0; c < nClauses; ++c) {
      varSort.clear();
      std::vector<std::string> theory, body;
      if (!cfg.allFinite) {
        int nt = pick(0, 2);
        for (int t = 0; t < nt; ++t) {
          static const char* rels[6] = {"<=", "<", "=", "!=", ">", ">="};
          std::string rel = rels[pick(0, 5)];
          std::string lhs = vars[pick(0, 2)];
          if (chance(30)) {  // two-variable atom
            lhs += std::string(chance(50) ? " + " : " - ") + vars[pick(0, 2)];
          }
          theory.push_back(lhs + " " + rel + " " + std::to_string(pick(-3, 3)));
        }
      }
      int nb = pick(0, 3);
      for (int b = 0; b < nb; ++b) body.push_back(atomFor(pick(0, nPreds - 1)));

      os << "clause ";
      for (std::size_t i = 0; i < theory.size(); ++i) os << (i ? ", " : "") << theory[i];
      os << " || ";
      for (std::size_t i = 0; i < body.size(); ++i) os << (i ? ", " : "") << body[i];
      os << " -> ";
      if (chance(12))
        os << "false";
      else
        os << atomFor(pick(0, nPreds - 1));
      os << ".\n";
    }

    if (cfg.kind != Kind::Plain) {
      int q = pick(0, nPreds - 1);
      bool forall = cfg.kind == Kind::Forall;
      os << "conjecture " << (forall ? "forall" : "exists");
      std::string argsText;
      std::vector<std::string> bound;
      for (int i = 0; i < arity[q]; ++i) {
        if (!forall && chance(30)) {
          int s = argSort[q][i];
          argsText += std::string(i ? ", " : "") +
                      (s >= 0 ? members[s][pick(0, static_cast<int>(members[s].size()) - 1)]
                              : std::to_string(pick(-3, 3)));
        } else {
          std::string v = "q" + std::to_string(i);
          bound.push_back(v);
          argsText += std::string(i ? ", " : "") + v;
        }
      }
      for (std::size_t i = 0; i < bound.size(); ++i)
        os << (i ? ", " : " ") << bound[i];
      os << ". P" << q << "(" << argsText << ").\n";
    }
    return os.str();
  }
};

}  // namespace slah_tests

#endif
