#include "simpair/shapes.hpp"

#include <algorithm>
#include <charconv>

#include "simpair/error.hpp"

namespace simpair {

ShapeSeq::ShapeSeq(std::vector<Cardinal> prefix, Cardinal tail, Cardinal omega)
    : prefix_(std::move(prefix)), tail_(tail), omega_(omega) {
  while (!prefix_.empty() && prefix_.back() == tail_) prefix_.pop_back();
}

Cardinal ShapeSeq::at(std::size_t m) const {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "shape positions start at 1");
  return m <= prefix_.size() ? prefix_[m - 1] : tail_;
}

Cardinal ShapeSeq::at(Cardinal position) const {
  if (position == Cardinal::aleph0()) return omega_;
  if (!position.is_finite()) throw Error(ErrorCode::InvalidArgument, "shape positions are 1..omega");
  return at(static_cast<std::size_t>(position.count()));
}

bool shape_leq(const ShapeSeq& a, const ShapeSeq& b) {
  auto k = std::max(a.prefix().size(), b.prefix().size());
  for (std::size_t m = 1; m <= k + 1; ++m)
    if (a.at(m) > b.at(m)) return false;
  return a.omega() <= b.omega();
}

bool sc_member(const ShapeSeq& s) {
  if (s.is_zero()) return false;
  auto within_local = [](Cardinal c) { return c <= Cardinal::aleph0(); };
  if (!within_local(s.tail()) || !within_local(s.omega())) return false;
  Cardinal prev = Cardinal::aleph0();
  for (auto v : s.prefix()) {
    if (!within_local(v) || v > prev) return false;
    prev = v;
  }
  if (s.tail() > prev) return false;
  if (s.tail() == Cardinal::aleph0()) return true;  // constantly omega on finite positions
  return s.omega() == s.tail();
}

LocalFineShape::LocalFineShape(ShapeSeq seq) : seq_(std::move(seq)) {
  if (seq_.is_zero()) throw Error(ErrorCode::NotRealizable, "local shape is constantly zero");
  auto ok = [](Cardinal c) { return c <= Cardinal::aleph0(); };
  bool fine = ok(seq_.tail()) && ok(seq_.omega()) && std::all_of(seq_.prefix().begin(), seq_.prefix().end(), ok);
  if (!fine) throw Error(ErrorCode::NotRealizable, "local fine shape values must be at most aleph_0");
}

LocalCoarseShape::LocalCoarseShape(ShapeSeq seq) : seq_(std::move(seq)) {
  if (!sc_member(seq_)) throw Error(ErrorCode::NotInSc, print_shape_literal(seq_) + " is not a local coarse shape");
}

namespace {

ShapeSeq fine_from_sizes(const std::vector<std::size_t>& sizes) {
  std::vector<Cardinal> counts;
  for (auto s : sizes) {
    if (counts.size() < s) counts.resize(s);
    counts[s - 1] += Cardinal(1);
  }
  return ShapeSeq(std::move(counts), Cardinal(), Cardinal());
}

ShapeSeq coarse_from_sizes(const std::vector<std::size_t>& sizes) {
  std::vector<Cardinal> counts;
  for (auto s : sizes) {
    if (counts.size() < s) counts.resize(s);
    for (std::size_t m = 0; m < s; ++m) counts[m] += Cardinal(1);
  }
  return ShapeSeq(std::move(counts), Cardinal(), Cardinal());
}

std::vector<std::size_t> block_sizes(const FinEqRel& r) {
  std::vector<std::size_t> sizes;
  for (const auto& b : r.blocks()) sizes.push_back(b.size());
  return sizes;
}

std::vector<std::size_t> e_sizes_in(const FinPair& p, std::size_t c) {
  if (c >= p.F().num_classes())
    throw Error(ErrorCode::ClassIndexOutOfRange, "F-class " + std::to_string(c) + " does not exist");
  std::vector<std::size_t> sizes;
  for (auto e : p.e_classes_in(c)) sizes.push_back(p.E().block(e).size());
  return sizes;
}

}  // namespace

ShapeSeq fs_of(const FinEqRel& r) { return fine_from_sizes(block_sizes(r)); }

ShapeSeq cs_of(const FinEqRel& r) { return coarse_from_sizes(block_sizes(r)); }

LocalFineShape lfs_of_class(const FinPair& p, std::size_t c) { return LocalFineShape(fine_from_sizes(e_sizes_in(p, c))); }

LocalCoarseShape lcs_of_class(const FinPair& p, std::size_t c) {
  return LocalCoarseShape(coarse_from_sizes(e_sizes_in(p, c)));
}

LocalCoarseShape fine_to_coarse(const LocalFineShape& a) {
  const auto& s = a.seq();
  if (!s.tail().is_zero()) return LocalCoarseShape(ShapeSeq({}, Cardinal::aleph0(), s.omega()));
  std::vector<Cardinal> prefix(s.prefix().size());
  Cardinal running = s.omega();
  for (std::size_t i = prefix.size(); i-- > 0;) {
    running += s.prefix()[i];
    prefix[i] = running;
  }
  return LocalCoarseShape(ShapeSeq(std::move(prefix), s.omega(), s.omega()));
}

ShapeSeq crs_of(const FinPair& p) {
  std::vector<std::size_t> counts;
  for (std::size_t c = 0; c < p.F().num_classes(); ++c) counts.push_back(p.e_classes_in(c).size());
  return coarse_from_sizes(counts);
}

GlobalFineShape gfs_of(const FinPair& p) {
  GlobalFineShape g;
  for (std::size_t c = 0; c < p.F().num_classes(); ++c) g[lfs_of_class(p, c)] += Cardinal(1);
  return g;
}

Cardinal min_size(const ShapeSeq& s) {
  if (!sc_member(s)) throw Error(ErrorCode::NotRealizable, print_shape_literal(s) + " is not in Sc");
  if (!s.tail().is_zero()) return Cardinal::aleph0();
  return sum(s.prefix());
}

namespace {

struct LiteralReader {
  std::string_view text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, 1, pos + 1); }

  void expect(char c) {
    if (pos >= text.size() || text[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }

  bool peek(char c) const { return pos < text.size() && text[pos] == c; }

  Cardinal token() {
    static constexpr std::pair<std::string_view, Cardinal> kNamed[] = {
        {"inf", Cardinal::aleph0()}, {"aleph1", Cardinal::aleph1()}, {"continuum", Cardinal::continuum()}};
    for (auto [name, value] : kNamed) {
      if (text.substr(pos, name.size()) == name) {
        pos += name.size();
        return value;
      }
    }
    std::uint64_t v = 0;
    auto first = text.data() + pos;
    auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), v);
    if (ptr == first) fail("expected a nonnegative integer or 'inf'");
    if (ec != std::errc()) fail("integer out of range");
    pos += static_cast<std::size_t>(ptr - first);
    return Cardinal(v);
  }
};

}  // namespace

ShapeSeq parse_shape_literal(std::string_view text) {
  LiteralReader r{text};
  r.expect('<');
  std::vector<Cardinal> prefix;
  if (!r.peek('|')) {
    prefix.push_back(r.token());
    while (r.peek(',')) {
      r.expect(',');
      prefix.push_back(r.token());
    }
  }
  r.expect('|');
  auto tail = r.token();
  r.expect(';');
  auto omega = r.token();
  r.expect('>');
  if (r.pos != text.size()) r.fail("trailing characters");
  return ShapeSeq(std::move(prefix), tail, omega);
}

std::string print_shape_literal(const ShapeSeq& s) {
  std::string out = "<";
  for (std::size_t i = 0; i < s.prefix().size(); ++i) {
    if (i) out += ',';
    out += s.prefix()[i].str();
  }
  out += '|' + s.tail().str() + ';' + s.omega().str() + '>';
  return out;
}

std::string print_gfs(const GlobalFineShape& g) {
  std::string out = "{";
  bool first = true;
  for (const auto& [shape, count] : g) {
    if (!first) out += ", ";
    first = false;
    out += print_shape_literal(shape) + ':' + count.str();
  }
  return out + '}';
}

}  // namespace simpair
