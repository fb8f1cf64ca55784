#include "cubecat/bch.hpp"

#include <functional>

#include "cubecat/errors.hpp"
#include "cubecat/vertex.hpp"

namespace cubecat {

namespace {

void check_object(int n, const char* what) {
  if (n < 0 || n > kMaxDimension) {
    throw DimensionError(std::string(what) + " " + std::to_string(n) + " out of range");
  }
}

}  // namespace

BchValue BchValue::coordinate(int j) {
  if (j < 0) throw DimensionError("negative coordinate");
  return BchValue(false, j);
}

BchValue BchValue::constant(bool b) { return BchValue(true, b ? 1 : 0); }

BchValue BchValue::parse(std::string_view text) {
  if (text.size() < 2 || (text[0] != 'j' && text[0] != 'b')) {
    throw ParseError("expected j<index> or b<0|1>, found '" + std::string(text) + "'", 0);
  }
  int value = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw ParseError("expected a digit in '" + std::string(text) + "'", i);
    }
    value = value * 10 + (text[i] - '0');
    if (value > kMaxDimension) throw ParseError("index too large in '" + std::string(text) + "'", i);
  }
  if (text[0] == 'j') return coordinate(value);
  if (value > 1) throw ParseError("constant must be b0 or b1, found '" + std::string(text) + "'", 1);
  return constant(value == 1);
}

int BchValue::coordinate() const {
  if (is_constant_) throw DimensionError("value is a constant, not a coordinate");
  return value_;
}

bool BchValue::constant_value() const {
  if (!is_constant_) throw DimensionError("value is a coordinate, not a constant");
  return value_ == 1;
}

std::string BchValue::str() const { return (is_constant_ ? "b" : "j") + std::to_string(value_); }

BchMorphism::BchMorphism(int m, int n, std::vector<BchValue> map) : m_(m), n_(n), map_(std::move(map)) {
  check_object(m, "domain");
  check_object(n, "codomain");
  if (map_.size() != static_cast<std::size_t>(m)) {
    throw DimensionError("□(" + std::to_string(m) + "," + std::to_string(n) + ") arrow needs " +
                         std::to_string(m) + " entries, got " + std::to_string(map_.size()));
  }
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (const auto& v : map_) {
    if (v.is_constant()) continue;
    const int j = v.coordinate();
    if (j >= n) throw DimensionError("coordinate j" + std::to_string(j) + " out of range for n=" + std::to_string(n));
    if (hit[static_cast<std::size_t>(j)]) {
      throw DimensionError("not injective on the left part: j" + std::to_string(j) + " hit twice");
    }
    hit[static_cast<std::size_t>(j)] = true;
  }
}

BchMorphism BchMorphism::identity(int n) {
  std::vector<BchValue> map;
  for (int i = 0; i < n; ++i) map.push_back(BchValue::coordinate(i));
  return BchMorphism(n, n, std::move(map));
}

std::string BchMorphism::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < map_.size(); ++i) {
    if (i > 0) out += ',';
    out += map_[i].str();
  }
  return out + "]";
}

BchMorphism bch_compose(const BchMorphism& outer, const BchMorphism& inner) {
  if (inner.n() != outer.m()) {
    throw DimensionError("□ arrows do not compose: inner codomain " + std::to_string(inner.n()) +
                         " != outer domain " + std::to_string(outer.m()));
  }
  std::vector<BchValue> map;
  map.reserve(inner.map().size());
  for (const auto& v : inner.map()) map.push_back(v.is_constant() ? v : outer[v.coordinate()]);
  return BchMorphism(inner.m(), outer.n(), std::move(map));
}

std::vector<BchMorphism> enumerate_bch(int m, int n) {
  check_object(m, "domain");
  check_object(n, "codomain");
  std::vector<BchValue> values;
  for (int j = 0; j < n; ++j) values.push_back(BchValue::coordinate(j));
  values.push_back(BchValue::constant(false));
  values.push_back(BchValue::constant(true));

  std::vector<BchMorphism> out;
  std::vector<BchValue> current;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::function<void()> extend = [&] {
    if (current.size() == static_cast<std::size_t>(m)) {
      out.emplace_back(m, n, current);
      return;
    }
    for (const auto& v : values) {
      if (v.is_coordinate() && used[static_cast<std::size_t>(v.coordinate())]) continue;
      if (v.is_coordinate()) used[static_cast<std::size_t>(v.coordinate())] = true;
      current.push_back(v);
      extend();
      current.pop_back();
      if (v.is_coordinate()) used[static_cast<std::size_t>(v.coordinate())] = false;
    }
  };
  extend();
  return out;
}

PartialInjection::PartialInjection(int m, int n, std::vector<std::optional<int>> map)
    : m_(m), n_(n), map_(std::move(map)) {
  check_object(m, "domain");
  check_object(n, "codomain");
  if (map_.size() != static_cast<std::size_t>(m)) throw DimensionError("partial injection has the wrong length");
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (const auto& v : map_) {
    if (!v) continue;
    if (*v < 0 || *v >= n) throw DimensionError("partial injection value out of range");
    if (hit[static_cast<std::size_t>(*v)]) throw DimensionError("partial function is not injective");
    hit[static_cast<std::size_t>(*v)] = true;
  }
}

std::string PartialInjection::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < map_.size(); ++i) {
    if (i > 0) out += ',';
    out += map_[i] ? "j" + std::to_string(*map_[i]) : std::string("-");
  }
  return out + "]";
}

PartialInjection transpose_partial_injection(const PartialInjection& p) {
  std::vector<std::optional<int>> map(static_cast<std::size_t>(p.n()));
  for (int i = 0; i < p.m(); ++i) {
    if (const auto j = p[i]) map[static_cast<std::size_t>(*j)] = i;
  }
  return PartialInjection(p.n(), p.m(), std::move(map));
}

std::vector<PartialInjection> enumerate_partial_injections(int m, int n) {
  check_object(m, "domain");
  check_object(n, "codomain");
  std::vector<PartialInjection> out;
  std::vector<std::optional<int>> current;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::function<void()> extend = [&] {
    if (current.size() == static_cast<std::size_t>(m)) {
      out.emplace_back(m, n, current);
      return;
    }
    for (int j = 0; j <= n; ++j) {
      if (j < n && used[static_cast<std::size_t>(j)]) continue;
      if (j < n) used[static_cast<std::size_t>(j)] = true;
      current.push_back(j < n ? std::optional<int>(j) : std::nullopt);
      extend();
      current.pop_back();
      if (j < n) used[static_cast<std::size_t>(j)] = false;
    }
  };
  extend();
  return out;
}

}  // namespace cubecat
