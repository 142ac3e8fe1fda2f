#include "chevalley/golden_table.hpp"

#include <stdexcept>

namespace chevalley {

namespace {

using R = Rational;

bool divides(std::uint32_t p, int n) { return n % static_cast<int>(p) == 0; }

std::vector<GoldenRow> build_rows() {
  std::vector<GoldenRow> rows;
  auto add = [&rows](Family f, std::string type, std::string pl, std::function<bool(int, std::uint32_t)> applies,
                     std::function<GoldenValues(int)> values) {
    rows.push_back({f, std::move(type), std::move(pl), std::move(applies), std::move(values)});
  };

  add(Family::A, "A_l, l>=2", "(p,l+1)=1",
      [](int l, std::uint32_t p) { return l >= 2 && !divides(p, l + 1); },
      [](int l) { return GoldenValues{"A_l, (p,l+1)=1", 0, l + 1, R(1, 2), l * l, 1, l * l}; });
  add(Family::A, "A_l, l>=2", "p|(l+1)",
      [](int l, std::uint32_t p) { return l >= 2 && divides(p, l + 1); },
      [](int l) { return GoldenValues{"A_l, p|(l+1)", 1, l + 1, R(l, 2 * l - 1), l * l, 1, l * l}; });
  add(Family::B, "B_l, l>=3", "p!=2",
      [](int l, std::uint32_t p) { return l >= 3 && p != 2; },
      [](int l) {
        return GoldenValues{"B_l, p!=2", 0, 2 * l - 1, R(1, 4) * (R(1) + R(1, l - 1)), 2 * l * l - 3 * l + 4, 1,
                            2 * l * l - 3 * l + 2};
      });
  add(Family::C, "C_l, l>=2", "p!=2",
      [](int l, std::uint32_t p) { return l >= 2 && p != 2; },
      [](int l) { return GoldenValues{"C_l, p!=2", 0, l + 1, R(1, 2), 2 * l * l - l, 1, 2 * l * l - 3 * l + 2}; });
  add(Family::D, "D_l, l>=4", "p!=2",
      [](int l, std::uint32_t p) { return l >= 4 && p != 2; },
      [](int l) {
        return GoldenValues{"D_l, p!=2", 0, 2 * l - 2, R(1, 4) * (R(1) + R(3, 2 * l - 3)), 2 * l * l - 5 * l + 6, 1,
                            2 * l * l - 5 * l + 4};
      });
  add(Family::D, "D_l, l=2l_0>=4", "2",
      [](int l, std::uint32_t p) { return l >= 4 && l % 2 == 0 && p == 2; },
      [](int l) {
        return GoldenValues{"D_l even, p=2", 2, 2 * l - 2, R(1, 4) * (R(1) + R(2, l - 2)), 2 * l * l - 5 * l + 6, 1,
                            2 * l * l - 5 * l + 4};
      });
  add(Family::D, "D_l, l=2l_0+1>=4", "2",
      [](int l, std::uint32_t p) { return l >= 4 && l % 2 == 1 && p == 2; },
      [](int l) {
        return GoldenValues{"D_l odd, p=2", 1, 2 * l - 2, R(1, 4) * (R(1) + R(7, 4 * l - 7)), 2 * l * l - 5 * l + 6,
                            1, 2 * l * l - 5 * l + 4};
      });
  add(Family::G, "G_2", "p>3",
      [](int l, std::uint32_t p) { return l == 2 && p > 3; },
      [](int) { return GoldenValues{"G_2, p>3", 0, 4, R(1, 3), 8, 1, 4}; });
  add(Family::G, "G_2", "p=2",
      [](int l, std::uint32_t p) { return l == 2 && p == 2; },
      [](int) { return GoldenValues{"G_2, p=2", 0, 4, R(1, 3), 8, 1, 6}; });
  add(Family::F, "F_4", "p!=2",
      [](int l, std::uint32_t p) { return l == 4 && p != 2; },
      [](int) { return GoldenValues{"F_4, p!=2", 0, 9, R(1, 4), 36, 1, 22}; });
  add(Family::E, "E_6", "p!=3",
      [](int l, std::uint32_t p) { return l == 6 && p != 3; },
      [](int) { return GoldenValues{"E_6, p!=3", 0, 12, R(3, 11), 56, 1, 46}; });
  add(Family::E, "E_6", "3",
      [](int l, std::uint32_t p) { return l == 6 && p == 3; },
      [](int) { return GoldenValues{"E_6, p=3", 1, 12, R(2, 7), 56, 1, 46}; });
  add(Family::E, "E_7", "p!=2",
      [](int l, std::uint32_t p) { return l == 7 && p != 2; },
      [](int) { return GoldenValues{"E_7, p!=2", 0, 18, R(7, 34), 99, 7, 79}; });
  add(Family::E, "E_7", "p=2",
      [](int l, std::uint32_t p) { return l == 7 && p == 2; },
      [](int) { return GoldenValues{"E_7, p=2", 1, 18, R(7, 33), 99, 7, 79}; });
  add(Family::E, "E_8", "p!=2",
      [](int l, std::uint32_t p) { return l == 8 && p != 2; },
      [](int) { return GoldenValues{"E_8, p!=2", 0, 30, R(4, 29), 190, 8, 134}; });
  add(Family::E, "E_8", "p=2",
      [](int l, std::uint32_t p) { return l == 8 && p == 2; },
      [](int) { return GoldenValues{"E_8, p=2", 0, 30, R(4, 29), 190, 3, 136}; });
  return rows;
}

}  // namespace

const std::vector<GoldenRow>& golden_rows() {
  static const std::vector<GoldenRow> rows = build_rows();
  return rows;
}

std::optional<GoldenValues> golden_lookup(const RootSystemSpec& spec, std::uint32_t p) {
  std::optional<GoldenValues> found;
  for (const GoldenRow& row : golden_rows()) {
    if (row.family != spec.family || !row.applies(spec.rank, p)) continue;
    if (found) throw std::logic_error("two table rows apply to " + spec.name());
    found = row.values(spec.rank);
  }
  return found;
}

}  // namespace chevalley
