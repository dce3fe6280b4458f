#include "equichrome/vertex_label.hpp"

#include <charconv>

#include "equichrome/errors.hpp"

namespace equichrome {

namespace {

int kind_rank(VertexLabel::Kind k) {
  switch (k) {
    case VertexLabel::Kind::hub: return 0;
    case VertexLabel::Kind::internal: return 1;
    case VertexLabel::Kind::cohub: return 2;
    case VertexLabel::Kind::plain: return 3;
    case VertexLabel::Kind::total_vert: return 4;
    case VertexLabel::Kind::total_edge: return 5;
  }
  return 6;
}

int parse_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    fail(Errc::malformed_input, "bad integer in vertex label: '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

VertexLabel VertexLabel::make_hub() {
  VertexLabel v;
  v.kind_ = Kind::hub;
  return v;
}

VertexLabel VertexLabel::make_cohub() {
  VertexLabel v;
  v.kind_ = Kind::cohub;
  return v;
}

VertexLabel VertexLabel::internal(int path, int pos) {
  if (path < 1 || pos < 1) fail(Errc::bad_parameter, "internal label needs path, pos >= 1");
  VertexLabel v;
  v.kind_ = Kind::internal;
  v.a_ = path;
  v.b_ = pos;
  return v;
}

VertexLabel VertexLabel::plain(int index) {
  if (index < 0) fail(Errc::bad_parameter, "plain label needs index >= 0");
  VertexLabel v;
  v.kind_ = Kind::plain;
  v.a_ = index;
  return v;
}

VertexLabel VertexLabel::total_vert(const VertexLabel& inner) {
  VertexLabel v;
  v.kind_ = Kind::total_vert;
  v.x_ = std::make_shared<VertexLabel>(inner);
  return v;
}

VertexLabel VertexLabel::total_edge(const VertexLabel& a, const VertexLabel& b) {
  if (a == b) fail(Errc::bad_parameter, "total_edge endpoints must differ: " + a.str());
  VertexLabel v;
  v.kind_ = Kind::total_edge;
  const VertexLabel& lo = (a < b) ? a : b;
  const VertexLabel& hi = (a < b) ? b : a;
  v.x_ = std::make_shared<VertexLabel>(lo);
  v.y_ = std::make_shared<VertexLabel>(hi);
  return v;
}

int VertexLabel::path() const {
  if (kind_ != Kind::internal) fail(Errc::bad_parameter, "path() on non-internal label");
  return a_;
}

int VertexLabel::pos() const {
  if (kind_ != Kind::internal) fail(Errc::bad_parameter, "pos() on non-internal label");
  return b_;
}

int VertexLabel::index() const {
  if (kind_ != Kind::plain) fail(Errc::bad_parameter, "index() on non-plain label");
  return a_;
}

const VertexLabel& VertexLabel::inner() const {
  if (kind_ != Kind::total_vert) fail(Errc::bad_parameter, "inner() on non-total_vert label");
  return *x_;
}

const VertexLabel& VertexLabel::first() const {
  if (kind_ != Kind::total_edge) fail(Errc::bad_parameter, "first() on non-total_edge label");
  return *x_;
}

const VertexLabel& VertexLabel::second() const {
  if (kind_ != Kind::total_edge) fail(Errc::bad_parameter, "second() on non-total_edge label");
  return *y_;
}

int VertexLabel::cmp(const VertexLabel& o) const {
  int lr = kind_rank(kind_);
  int rr = kind_rank(o.kind_);
  if (lr != rr) return lr < rr ? -1 : 1;
  switch (kind_) {
    case Kind::hub:
    case Kind::cohub:
      return 0;
    case Kind::internal:
      if (a_ != o.a_) return a_ < o.a_ ? -1 : 1;
      if (b_ != o.b_) return b_ < o.b_ ? -1 : 1;
      return 0;
    case Kind::plain:
      if (a_ != o.a_) return a_ < o.a_ ? -1 : 1;
      return 0;
    case Kind::total_vert:
      return x_->cmp(*o.x_);
    case Kind::total_edge: {
      int c = x_->cmp(*o.x_);
      if (c != 0) return c;
      return y_->cmp(*o.y_);
    }
  }
  return 0;
}

std::string VertexLabel::str() const {
  switch (kind_) {
    case Kind::hub: return "u";
    case Kind::cohub: return "w";
    case Kind::internal: return "v_" + std::to_string(a_) + "_" + std::to_string(b_);
    case Kind::plain: return "p_" + std::to_string(a_);
    case Kind::total_vert: return "tv(" + x_->str() + ")";
    case Kind::total_edge: return "te(" + x_->str() + "," + y_->str() + ")";
  }
  return "?";
}

VertexLabel VertexLabel::parse(std::string_view s) {
  if (s == "u") return make_hub();
  if (s == "w") return make_cohub();
  if (s.starts_with("v_")) {
    auto rest = s.substr(2);
    auto sep = rest.find('_');
    if (sep == std::string_view::npos) fail(Errc::malformed_input, "bad label: " + std::string(s));
    return internal(parse_int(rest.substr(0, sep)), parse_int(rest.substr(sep + 1)));
  }
  if (s.starts_with("p_")) return plain(parse_int(s.substr(2)));
  if (s.starts_with("tv(") && s.ends_with(")")) {
    return total_vert(parse(s.substr(3, s.size() - 4)));
  }
  if (s.starts_with("te(") && s.ends_with(")")) {
    auto body = s.substr(3, s.size() - 4);
    int depth = 0;
    for (std::size_t i = 0; i < body.size(); ++i) {
      char c = body[i];
      if (c == '(') ++depth;
      else if (c == ')') --depth;
      else if (c == ',' && depth == 0) {
        return total_edge(parse(body.substr(0, i)), parse(body.substr(i + 1)));
      }
    }
    fail(Errc::malformed_input, "bad te label: " + std::string(s));
  }
  fail(Errc::malformed_input, "unrecognized vertex label: '" + std::string(s) + "'");
}

}  // namespace equichrome
