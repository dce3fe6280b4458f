#pragma once

#include <memory>
#include <string>
#include <string_view>

namespace equichrome {

/// Structured vertex name used by every graph in the library.
///
/// The canonical order (hub, internals by (path, pos), co-hub, plain by
/// index, then total-vertex and total-edge wrappers compared recursively)
/// resolves every "arbitrary" choice made by the solvers deterministically.
class VertexLabel {
 public:
  enum class Kind { hub, internal, cohub, plain, total_vert, total_edge };

  VertexLabel() : kind_(Kind::hub) {}

  static VertexLabel make_hub();
  static VertexLabel make_cohub();
  static VertexLabel internal(int path, int pos);
  static VertexLabel plain(int index);
  static VertexLabel total_vert(const VertexLabel& inner);
  /// Endpoints are stored in canonical order; a == b is rejected.
  static VertexLabel total_edge(const VertexLabel& a, const VertexLabel& b);

  Kind kind() const { return kind_; }
  int path() const;   // internal only
  int pos() const;    // internal only
  int index() const;  // plain only
  const VertexLabel& inner() const;   // total_vert only
  const VertexLabel& first() const;   // total_edge only
  const VertexLabel& second() const;  // total_edge only

  int cmp(const VertexLabel& o) const;
  bool operator==(const VertexLabel& o) const { return cmp(o) == 0; }
  bool operator!=(const VertexLabel& o) const { return cmp(o) != 0; }
  bool operator<(const VertexLabel& o) const { return cmp(o) < 0; }
  bool operator<=(const VertexLabel& o) const { return cmp(o) <= 0; }
  bool operator>(const VertexLabel& o) const { return cmp(o) > 0; }
  bool operator>=(const VertexLabel& o) const { return cmp(o) >= 0; }

  /// "u", "w", "v_2_3", "p_0", "tv(u)", "te(u,v_1_1)"
  std::string str() const;
  static VertexLabel parse(std::string_view s);

 private:
  Kind kind_;
  int a_ = 0;
  int b_ = 0;
  std::shared_ptr<const VertexLabel> x_;
  std::shared_ptr<const VertexLabel> y_;
};

inline VertexLabel hub() { return VertexLabel::make_hub(); }
inline VertexLabel cohub() { return VertexLabel::make_cohub(); }
inline VertexLabel internal(int path, int pos) { return VertexLabel::internal(path, pos); }

}  // namespace equichrome
