#include "lvf/index.hpp"

#include <charconv>

#include "lvf/errors.hpp"

namespace lvf {

namespace {

std::int64_t parse_int(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError("bad index literal '" + std::string(s) + "'");
  }
  return v;
}

} // namespace

HalfIndex HalfIndex::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return HalfIndex(parse_int(text));
  if (text.substr(slash + 1) != "2") throw ParseError("index denominator must be 2");
  const std::int64_t num = parse_int(text.substr(0, slash));
  if ((num & 1) == 0) throw ParseError("half index '" + std::string(text) + "' is not in lowest terms");
  return from_doubled(num);
}

std::int64_t HalfIndex::to_integer() const {
  if (is_half()) throw InvalidArgument("index " + to_string() + " is not an integer");
  return doubled_ / 2;
}

std::string HalfIndex::to_string() const {
  if (is_half()) return std::to_string(doubled_) + "/2";
  return std::to_string(doubled_ / 2);
}

std::ostream& operator<<(std::ostream& os, HalfIndex h) { return os << h.to_string(); }

std::int64_t index_distance(HalfIndex a, HalfIndex b) {
  const std::int64_t d = a.doubled() - b.doubled();
  if (d & 1) throw InvalidArgument("indices " + a.to_string() + " and " + b.to_string() + " differ in parity");
  return (d < 0 ? -d : d) / 2;
}

IndexWindow::IndexWindow(HalfIndex lo, HalfIndex hi) : lo_(lo), hi_(hi) {
  if (lo.is_half() != hi.is_half()) throw InvalidArgument("window ends differ in parity class");
  if (hi < lo) throw InvalidArgument("empty window [" + lo.to_string() + ".." + hi.to_string() + "]");
}

IndexWindow IndexWindow::parse(std::string_view text) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw ParseError("window must look like [lo..hi]");
  }
  text = text.substr(1, text.size() - 2);
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) throw ParseError("window must look like [lo..hi]");
  return {HalfIndex::parse(text.substr(0, dots)), HalfIndex::parse(text.substr(dots + 2))};
}

bool IndexWindow::contains(HalfIndex p) const {
  return p.is_half() == lo_.is_half() && lo_ <= p && p <= hi_;
}

std::vector<HalfIndex> IndexWindow::indices() const {
  std::vector<HalfIndex> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (HalfIndex p = lo_; p <= hi_; p += HalfIndex(1)) out.push_back(p);
  return out;
}

std::optional<IndexWindow> IndexWindow::shrink(std::int64_t margin) const {
  const HalfIndex lo = lo_ + HalfIndex(margin);
  const HalfIndex hi = hi_ - HalfIndex(margin);
  if (hi < lo) return std::nullopt;
  return IndexWindow(lo, hi);
}

std::string IndexWindow::to_string() const {
  return "[" + lo_.to_string() + ".." + hi_.to_string() + "]";
}

std::ostream& operator<<(std::ostream& os, const IndexWindow& w) { return os << w.to_string(); }

} // namespace lvf
