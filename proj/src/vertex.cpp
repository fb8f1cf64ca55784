#include "cubecat/vertex.hpp"

#include <bit>

#include "cubecat/errors.hpp"

namespace cubecat {

Vertex::Vertex(int dim, Bits value) : dim_(dim), value_(value) {
  if (dim < 0 || dim > kMaxDimension) {
    throw DimensionError("vertex dimension " + std::to_string(dim) + " out of range");
  }
  if (dim < 32 && (value >> dim) != 0) {
    throw DimensionError("vertex value " + std::to_string(value) + " does not fit in " +
                         std::to_string(dim) + " bits");
  }
}

Vertex Vertex::parse(std::string_view text) {
  if (text.size() > static_cast<std::size_t>(kMaxDimension)) {
    throw ParseError("bit sequence longer than " + std::to_string(kMaxDimension));
  }
  Bits value = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c != '0' && c != '1') {
      throw ParseError(std::string("expected '0' or '1', found '") + c + "'", i);
    }
    value = (value << 1) | static_cast<Bits>(c == '1');
  }
  return Vertex(static_cast<int>(text.size()), value);
}

bool Vertex::bit(int i) const {
  if (i < 0 || i >= dim_) throw DimensionError("bit index out of range");
  return ((value_ >> (dim_ - 1 - i)) & 1U) != 0;
}

Vertex Vertex::with_bit(int i, bool b) const {
  if (i < 0 || i >= dim_) throw DimensionError("bit index out of range");
  const Bits mask = Bits{1} << (dim_ - 1 - i);
  return Vertex(dim_, b ? (value_ | mask) : (value_ & ~mask));
}

int Vertex::count_zeros(int begin, int end) const {
  if (begin < 0 || end > dim_ || begin > end) throw DimensionError("bit range out of range");
  int zeros = 0;
  for (int i = begin; i < end; ++i) zeros += bit(i) ? 0 : 1;
  return zeros;
}

Vertex Vertex::insert_bit(int i, bool b) const {
  if (i < 0 || i > dim_) throw DimensionError("insert position out of range");
  const int low_len = dim_ - i;
  const Bits low = value_ & ((Bits{1} << low_len) - 1);
  const Bits high = value_ >> low_len;
  const Bits value = (((high << 1) | static_cast<Bits>(b)) << low_len) | low;
  return Vertex(dim_ + 1, value);
}

Vertex Vertex::erase_bit(int i) const {
  if (i < 0 || i >= dim_) throw DimensionError("erase position out of range");
  const int low_len = dim_ - 1 - i;
  const Bits low = value_ & ((Bits{1} << low_len) - 1);
  const Bits high = value_ >> (low_len + 1);
  return Vertex(dim_ - 1, (high << low_len) | low);
}

Vertex Vertex::prefix(int len) const {
  if (len < 0 || len > dim_) throw DimensionError("prefix length out of range");
  return Vertex(len, value_ >> (dim_ - len));
}

Vertex Vertex::prepend(bool head) const {
  return Vertex(dim_ + 1, (static_cast<Bits>(head) << dim_) | value_);
}

Vertex Vertex::concat(const Vertex& tail) const {
  return Vertex(dim_ + tail.dim_, (value_ << tail.dim_) | tail.value_);
}

std::string Vertex::str() const {
  std::string out;
  out.reserve(static_cast<std::size_t>(dim_));
  for (int i = 0; i < dim_; ++i) out.push_back(bit(i) ? '1' : '0');
  return out;
}

std::vector<Vertex> all_vertices(int n) {
  if (n < 0 || n > kMaxDimension) throw DimensionError("cube dimension out of range");
  std::vector<Vertex> out;
  out.reserve(std::size_t{1} << n);
  for (Bits v = 0; v < (Bits{1} << n); ++v) out.emplace_back(n, v);
  return out;
}

int single_difference(const Vertex& a, const Vertex& b) {
  if (a.dim() != b.dim()) return -1;
  const Bits diff = a.value() ^ b.value();
  if (std::popcount(diff) != 1) return -1;
  return a.dim() - 1 - std::countr_zero(diff);
}

std::string display(const Vertex& v) { return v.dim() == 0 ? std::string("ε") : v.str(); }

}  // namespace cubecat
