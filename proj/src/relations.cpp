#include "mccool/relations.hpp"

#include <algorithm>

#include "mccool/error.hpp"

namespace mccool {

namespace {

struct Builder {
  int n;

  GroupExpression expr(std::initializer_list<Factor> factors) const {
    return GroupExpression(n, std::vector<Factor>(factors));
  }
  GroupExpression one() const { return GroupExpression(n); }
};

Factor c(int k, int i, int e = 1) { return {Chi{k, i}, e}; }
Factor xi(int i, int e = 1) { return {Xi{i}, e}; }
Factor s(int i, int e = 1) { return {Sigma{i}, e}; }
Factor tau(int i, int e = 1) { return {Tau{i}, e}; }

bool distinct(std::initializer_list<int> v) {
  std::vector<int> sorted(v);
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

void require_rank(int n, int min, const char* what) {
  if (n < min) {
    throw Error(std::string(what) + " needs n >= " + std::to_string(min) + ", got " +
                std::to_string(n));
  }
}

}  // namespace

std::vector<RelationInstance> mccool_relations(int n) {
  require_rank(n, 2, "mccool_relations");
  const Builder b{n};
  std::vector<RelationInstance> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) {
        if (!distinct({i, j, k})) continue;
        out.push_back({"mccool-1", {i, j, k}, b.expr({c(i, j), c(k, j), c(i, k)}),
                       b.expr({c(i, k), c(i, j), c(k, j)})});
      }
    }
  }
  for (int k = 1; k <= n; ++k) {
    for (int j = 1; j <= n; ++j) {
      for (int s = 1; s <= n; ++s) {
        for (int t = 1; t <= n; ++t) {
          if (!distinct({k, j, s, t})) continue;
          out.push_back({"mccool-2", {k, j, s, t},
                         commutator(b.expr({c(k, j)}), b.expr({c(s, t)})), b.one()});
        }
      }
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) {
        if (!distinct({i, j, k})) continue;
        out.push_back({"mccool-3", {i, j, k},
                       commutator(b.expr({c(i, j)}), b.expr({c(k, j)})), b.one()});
      }
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) {
        if (!distinct({i, j, k})) continue;
        out.push_back({"mccool-4", {i, j, k},
                       commutator(b.expr({c(i, j), c(k, j)}), b.expr({c(i, k)})), b.one()});
      }
    }
  }
  return out;
}

std::vector<RelationInstance> conjugation_formulas(int n) {
  require_rank(n, 2, "conjugation_formulas");
  const Builder b{n};
  std::vector<RelationInstance> out;
  for (int i = 1; i <= n; ++i) {
    for (int s = 1; s <= n; ++s) {
      for (int t = 1; t <= n; ++t) {
        if (s == t) continue;
        Factor image = c(s, t);
        if (t == i) {
          image = c(s, i, -1);
        } else if (s == i) {
          image = c(i, t);
        }
        out.push_back({"tau-conj", {i, s, t}, b.expr({tau(i), c(s, t), tau(i, -1)}),
                       b.expr({image})});
      }
    }
  }
  for (int i = 1; i <= n - 1; ++i) {
    for (int s = 1; s <= n; ++s) {
      for (int t = 1; t <= n; ++t) {
        if (s == t) continue;
        Factor image = c(s, t);
        if (s == i && t != i + 1) {
          image = c(i + 1, t);
        } else if (s == i && t == i + 1) {
          image = c(i + 1, i);
        } else if (s == i + 1 && t != i) {
          image = c(i, t);
        } else if (s == i + 1 && t == i) {
          image = c(i, i + 1);
        } else if (t == i) {
          image = c(s, i + 1);
        } else if (t == i + 1) {
          image = c(s, i);
        }
        out.push_back({"xi-conj", {i, s, t}, b.expr({xi(i), c(s, t), xi(i, -1)}),
                       b.expr({image})});
      }
    }
  }
  return out;
}

std::vector<RelationInstance> kernel_conjugation_formulas(int n) {
  require_rank(n, 3, "kernel_conjugation_formulas");
  const Builder b{n};
  std::vector<RelationInstance> out;
  const int m = n - 1;
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      if (i == j) continue;
      out.push_back({"kernel-i", {i, j}, b.expr({c(i, j, -1), c(n, j), c(i, j)}),
                     b.expr({c(n, j)})});
    }
  }
  for (int i = 1; i <= m; ++i) {
    for (int k = 1; k <= m; ++k) {
      for (int j = 1; j <= m; ++j) {
        if (!distinct({i, k, j})) continue;
        out.push_back({"kernel-ii", {i, k, j}, b.expr({c(i, k, -1), c(n, j), c(i, k)}),
                       b.expr({c(n, j)})});
      }
    }
  }
  for (int j = 1; j <= m; ++j) {
    for (int k = 1; k <= m; ++k) {
      if (j == k) continue;
      out.push_back({"kernel-iii", {j, k}, b.expr({c(j, k, -1), c(n, j), c(j, k)}),
                     b.expr({c(n, k), c(n, j), c(n, k, -1)})});
    }
  }
  for (int i = 1; i <= m; ++i) {
    for (int k = 1; k <= m; ++k) {
      for (int j = 1; j <= m; ++j) {
        if (!distinct({i, k, j})) continue;
        out.push_back({"kernel-iv", {i, k, j}, b.expr({c(i, k, -1), c(j, n), c(i, k)}),
                       b.expr({c(j, n)})});
      }
    }
  }
  for (int j = 1; j <= m; ++j) {
    for (int i = 1; i <= m; ++i) {
      if (i == j) continue;
      out.push_back({"kernel-v", {j, i}, b.expr({c(j, i, -1), c(j, n), c(j, i)}),
                     b.expr({c(n, i), c(j, n), c(n, i, -1)})});
    }
  }
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      if (i == j) continue;
      out.push_back({"kernel-vi", {i, j}, b.expr({c(i, j, -1), c(j, n), c(i, j)}),
                     b.expr({c(n, j), c(i, n, -1), c(n, j, -1), c(i, n), c(j, n)})});
    }
  }
  return out;
}

std::vector<RelationInstance> bp_relations(int n) {
  require_rank(n, 2, "bp_relations");
  const Builder b{n};
  std::vector<RelationInstance> out;
  const int m = n - 1;
  for (int i = 1; i <= m; ++i) {
    out.push_back({"bp-1-square", {i}, b.expr({xi(i), xi(i)}), b.one()});
  }
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 2; j <= m; ++j) {
      out.push_back({"bp-1-commute", {i, j}, b.expr({xi(i), xi(j)}), b.expr({xi(j), xi(i)})});
    }
  }
  for (int i = 1; i + 1 <= m; ++i) {
    out.push_back({"bp-1-braid", {i}, b.expr({xi(i), xi(i + 1), xi(i)}),
                   b.expr({xi(i + 1), xi(i), xi(i + 1)})});
  }
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 2; j <= m; ++j) {
      out.push_back({"bp-2-commute", {i, j}, b.expr({s(i), s(j)}), b.expr({s(j), s(i)})});
    }
  }
  for (int i = 1; i + 1 <= m; ++i) {
    out.push_back({"bp-2-braid", {i}, b.expr({s(i), s(i + 1), s(i)}),
                   b.expr({s(i + 1), s(i), s(i + 1)})});
  }
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      if (std::abs(i - j) <= 1) continue;
      out.push_back({"bp-3-commute", {i, j}, b.expr({xi(i), s(j)}), b.expr({s(j), xi(i)})});
    }
  }
  for (int i = 1; i + 1 <= m; ++i) {
    // xi_i xi_{i+1} s_i = s_{i+1} xi_i xi_{i+1}, reversed.
    out.push_back({"bp-3-xxs", {i}, b.expr({s(i), xi(i + 1), xi(i)}),
                   b.expr({xi(i + 1), xi(i), s(i + 1)})});
    // s_i s_{i+1} xi_i = xi_{i+1} s_i s_{i+1}, reversed.
    out.push_back({"bp-3-ssx", {i}, b.expr({xi(i), s(i + 1), s(i)}),
                   b.expr({s(i + 1), s(i), xi(i + 1)})});
  }
  for (int i = 1; i <= m; ++i) {
    out.push_back({"bp-factor", {i}, b.expr({xi(i), s(i)}), b.expr({c(i + 1, i)})});
  }
  return out;
}

std::vector<RelationInstance> all_relations(int n) {
  std::vector<RelationInstance> out = mccool_relations(n);
  auto add = [&out](std::vector<RelationInstance> more) {
    out.insert(out.end(), std::make_move_iterator(more.begin()),
               std::make_move_iterator(more.end()));
  };
  add(conjugation_formulas(n));
  if (n >= 3) add(kernel_conjugation_formulas(n));
  add(bp_relations(n));
  return out;
}

bool holds(const RelationInstance& r) { return equal(evaluate(r.lhs), evaluate(r.rhs)); }

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.ok; }));
}

const std::vector<std::string>& relation_families() {
  static const std::vector<std::string> names = {
      "mccool-1",     "mccool-2",     "mccool-3",   "mccool-4",     "tau-conj",
      "xi-conj",      "kernel-i",     "kernel-ii",  "kernel-iii",   "kernel-iv",
      "kernel-v",     "kernel-vi",    "bp-1-square", "bp-1-commute", "bp-1-braid",
      "bp-2-commute", "bp-2-braid",   "bp-3-commute", "bp-3-xxs",    "bp-3-ssx",
      "bp-factor"};
  return names;
}

VerificationReport verify_all(int n, const std::string& family_filter) {
  require_rank(n, 2, "verify_all");
  const auto start = std::chrono::steady_clock::now();
  auto selected = [&](const std::string& family) {
    return family_filter.empty() || family.rfind(family_filter, 0) == 0;
  };

  VerificationReport report;
  report.n = n;
  for (const std::string& family : relation_families()) {
    if (selected(family)) report.families[family];
  }
  if (report.families.empty()) throw Error("no relation family matches '" + family_filter + "'");

  for (const RelationInstance& r : all_relations(n)) {
    if (!selected(r.family)) continue;
    const bool ok = holds(r);
    report.results.push_back({r.family, r.indices, ok});
    FamilyTally& tally = report.families[r.family];
    ++tally.instances;
    if (!ok) ++tally.failures;
  }
  std::sort(report.results.begin(), report.results.end(), [](const auto& a, const auto& b) {
    return std::tie(a.family, a.indices) < std::tie(b.family, b.indices);
  });
  report.runtime = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace mccool
