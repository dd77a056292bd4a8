#include "curveatlas/max_genus.hpp"

#include <fstream>

#include <json.hpp>

namespace curveatlas {

MaxGenusAnswer MaxGenusAnswer::exact(Int v, GenusRegime r) {
  return {Kind::Exact, v, r, ""};
}
MaxGenusAnswer MaxGenusAnswer::conjectural(Int v, std::string source) {
  return {Kind::Conjectural, v, GenusRegime::CRange, std::move(source)};
}
MaxGenusAnswer MaxGenusAnswer::out_of_range(std::string reason) {
  return {Kind::OutOfRange, 0, GenusRegime::CRange, std::move(reason)};
}

const BRangeFixtures& BRangeFixtures::builtin() {
  static const BRangeFixtures table = [] {
    BRangeFixtures t;
    t.insert(22, 6, 55, "conjectured B-range value G(22,6)=55");
    t.insert(32, 7, 111, "conjectured B-range value G(32,7)=111");
    return t;
  }();
  return table;
}

BRangeFixtures BRangeFixtures::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture file: " + path);
  nlohmann::json j;
  in >> j;
  BRangeFixtures t;
  for (const auto& row : j) {
    t.insert(Int(row.at("d").get<long long>()),
             Int(row.at("s").get<long long>()),
             Int(row.at("value").get<long long>()),
             row.value("source", std::string{}));
  }
  return t;
}

std::optional<BRangeFixture> BRangeFixtures::lookup(Int d, Int s) const {
  auto it = table_.find({d.as_i64(), s.as_i64()});
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

void BRangeFixtures::insert(Int d, Int s, Int value, std::string source) {
  table_[{d.as_i64(), s.as_i64()}] = BRangeFixture{value, std::move(source)};
}

MaxGenusAnswer max_genus(Int d, Int s) {
  return max_genus(d, s, BRangeFixtures::builtin());
}

MaxGenusAnswer max_genus(Int d, Int s, const BRangeFixtures& fixtures) {
  if (d < Int(1)) throw std::invalid_argument("max_genus: d must be >= 1");
  if (s < Int(2)) throw std::invalid_argument("max_genus: s must be >= 2");

  if (d > s * (s - 1)) {
    // C-range: G = 1 + (d^2 + d s (s-4) - r(s-r)(s-1)) / (2s), d+r = 0 mod s.
    Int r = ((-d) % s + s) % s;
    Int num = d * d + d * s * (s - 4) - r * (s - r) * (s - 1);
    if (num % (Int(2) * s) != Int(0))
      throw std::logic_error("NonIntegerG: C-range numerator not divisible by 2s");
    return MaxGenusAnswer::exact(num / (Int(2) * s) + 1, GenusRegime::CRange);
  }

  if (d >= s * s - Int(2) * s + 2) {
    // Extended C-range; mu runs from -1 up to s-3 here.
    Int mu = d - (s * s - Int(2) * s + 3);
    if (mu >= Int(0)) {
      Int num = mu * (mu + Int(2) * s - 3);
      if (num % Int(2) != Int(0))
        throw std::logic_error("NonIntegerG: extended-range term not even");
      Int base = s * s * s - Int(5) * s * s + Int(9) * s - 6;
      return MaxGenusAnswer::exact(base + num / 2, GenusRegime::ExtendedCRange);
    }
    return MaxGenusAnswer::exact(Int(1) + d * (s - 3),
                                 GenusRegime::ExtendedCRange);
  }

  if (auto fx = fixtures.lookup(d, s))
    return MaxGenusAnswer::conjectural(fx->value, fx->source);
  return MaxGenusAnswer::out_of_range("B-range value not tabulated");
}

Int fixture_AB(const std::string& key) {
  static const std::map<std::string, long long> table = {
      {"A(7,7)", 33}, {"A(7,6)", 28}, {"B(7,6)", 31}, {"A(6,5)", 23}};
  auto it = table.find(key);
  if (it == table.end())
    throw std::out_of_range("UnknownFixture: " + key);
  return Int(it->second);
}

}  // namespace curveatlas
