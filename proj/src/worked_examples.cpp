#include "vgit/worked_examples.hpp"

namespace vgit {

std::string to_string(const LinearForm& form) {
  auto term = [](std::int64_t c, const char* var) {
    if (c == 0) return std::string();
    return (c == 1 ? std::string() : std::to_string(c)) + var;
  };
  std::string a = term(form.c1, "d1");
  std::string b = term(form.c2, "d2");
  if (a.empty() && b.empty()) return "0";
  if (a.empty()) return b;
  if (b.empty()) return a;
  return a + (form.c2 > 0 ? "+" : "") + b;
}

const FlipsExData& flipsex_data() {
  static const FlipsExData data{
      {LinearForm{1, 0}, LinearForm{0, 1}},
      {4, 2},
      {FlipsExData::Generator{"I", 4, {2, 2}}, FlipsExData::Generator{"J", 6, {3, 3}},
       FlipsExData::Generator{"D", 4, {4, 0}}, FlipsExData::Generator{"R", 4, {1, 3}}},
      // I^3, I^2D, I^2R, ID^2, IR^2, IDR, J^2, D^3, D^2R, DR^2, R^3
      {{{3, 0, 0, 0}}, {{2, 0, 1, 0}}, {{2, 0, 0, 1}}, {{1, 0, 2, 0}}, {{1, 0, 0, 2}}, {{1, 0, 1, 1}},
       {{0, 2, 0, 0}}, {{0, 0, 3, 0}}, {{0, 0, 2, 1}}, {{0, 0, 1, 2}}, {{0, 0, 0, 3}}},
      {{6, 6}, {8, 4}, {5, 7}, {10, 2}, {4, 8}, {7, 5}, {12, 0}, {9, 3}, {3, 9}},
      {{6, 6}, {12, 0}, {3, 9}},
  };
  return data;
}

LinearForm monomial_weight(const FlipsExData::Monomial& monomial) {
  LinearForm total{0, 0};
  const auto& gens = flipsex_data().generators;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    total.c1 += monomial.exponents[g] * gens[g].bidegree.c1;
    total.c2 += monomial.exponents[g] * gens[g].bidegree.c2;
  }
  return total;
}

NotionCounts flipsex_notion_counts(std::int64_t d1, std::int64_t d2) {
  if (d1 == d2) throw InvalidInput("flipsex counts need d1 != d2");
  std::vector<Rational> on_q;
  for (const auto& form : flipsex_data().attainable_extremes) on_q.push_back(make_rational(form.at(d1, d2)));
  const std::vector<Rational> on_pw{make_rational(d1), make_rational(d2)};
  return {count_stability_notions(on_q), count_stability_notions(on_pw)};
}

TwoBlockReport example124_report(std::int64_t d1, std::int64_t d2) {
  if (!(d1 < d2)) throw InvalidInput("two-block example needs d1 < d2");
  const std::vector<WeightBlock> blocks{{d1, 2}, {d2, 2}};
  const WeightDecomposition decomp = make_decomposition(blocks);
  const Linearization sample(2, d1 + d2);
  TwoBlockReport report{decomp, chambers(decomp), {}, {}, sample, two_block_polarization(decomp, sample), {}};
  for (const auto& c : report.chambers) {
    report.semistable.push_back(semistable_supports(decomp, c));
    report.quotients.push_back(quotient_descriptor(decomp, c));
  }
  for (const Bidegree target : {Bidegree{1, 1}, Bidegree{2, 3}}) {
    report.realizations.emplace_back(target, realize_bidegree(decomp, target));
  }
  return report;
}

}  // namespace vgit
