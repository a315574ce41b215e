#ifndef QPSURF_QUIVER_HPP
#define QPSURF_QUIVER_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace qpsurf {

/// Arrow `id : tail -> head`; endpoints are indices into Quiver::vertices().
struct Arrow {
  std::string id;
  std::size_t tail = 0;
  std::size_t head = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Arrow given by vertex ids, used when building a quiver.
struct ArrowSpec {
  std::string id;
  std::string tail;
  std::string head;
};

/// Finite loop-free quiver. Vertices keep their construction order; arrows are
/// stored sorted by id so that arrow indices order paths lexicographically.
class Quiver {
 public:
  Quiver() = default;

  /// Throws PreconditionError on duplicate ids, unknown endpoints or loops.
  Quiver(std::vector<std::string> vertices, std::vector<ArrowSpec> arrows);

  [[nodiscard]] std::size_t vertex_count() const { return vertices_.size(); }
  [[nodiscard]] std::size_t arrow_count() const { return arrows_.size(); }
  [[nodiscard]] const std::vector<std::string>& vertices() const { return vertices_; }
  [[nodiscard]] const std::vector<Arrow>& arrows() const { return arrows_; }
  [[nodiscard]] const std::string& vertex(std::size_t i) const { return vertices_[i]; }
  [[nodiscard]] const Arrow& arrow(std::size_t i) const { return arrows_[i]; }

  [[nodiscard]] std::optional<std::size_t> find_vertex(std::string_view id) const;
  [[nodiscard]] std::optional<std::size_t> find_arrow(std::string_view id) const;
  /// Like find_vertex/find_arrow but throws PreconditionError when absent.
  [[nodiscard]] std::size_t vertex_index(std::string_view id) const;
  [[nodiscard]] std::size_t arrow_index(std::string_view id) const;

  /// Same vertices and arrows (ids and endpoint ids).
  friend bool operator==(const Quiver& a, const Quiver& b);

  [[nodiscard]] std::vector<ArrowSpec> arrow_specs() const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::unordered_map<std::string, std::size_t> vertex_lookup_;
  std::unordered_map<std::string, std::size_t> arrow_lookup_;
};

/// Square integer matrix whose rows/columns are labelled by vertex ids.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  explicit IntegerMatrix(std::vector<std::string> ids);
  IntegerMatrix(std::vector<std::string> ids, std::vector<std::vector<long long>> rows);

  [[nodiscard]] std::size_t size() const { return ids_.size(); }
  [[nodiscard]] const std::vector<std::string>& ids() const { return ids_; }
  [[nodiscard]] long long at(std::size_t i, std::size_t j) const { return data_[i * ids_.size() + j]; }
  long long& at(std::size_t i, std::size_t j) { return data_[i * ids_.size() + j]; }
  [[nodiscard]] long long at(std::string_view i, std::string_view j) const;

  [[nodiscard]] bool is_skew_symmetric() const;
  [[nodiscard]] long long max_abs_entry() const;

  /// Same matrix with rows/columns reordered to `order` (a permutation of ids()).
  [[nodiscard]] IntegerMatrix reordered(const std::vector<std::string>& order) const;
  /// Same matrix with ids renamed through `from -> to` pairs.
  [[nodiscard]] IntegerMatrix relabeled(const std::vector<std::pair<std::string, std::string>>& renames) const;

  /// Strict equality: same id order and same entries.
  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::vector<std::string> ids_;
  std::vector<long long> data_;
};

/// Equality of labelled matrices irrespective of row order.
[[nodiscard]] bool same_labelled_matrix(const IntegerMatrix& a, const IntegerMatrix& b);

/// b_ij > 0 yields b_ij arrows "i>j#k". Throws PreconditionError unless skew-symmetric.
[[nodiscard]] Quiver quiver_from_matrix(const IntegerMatrix& b);

/// b_ij = #(i->j) - #(j->i). Throws PreconditionError if the quiver has a 2-cycle.
[[nodiscard]] IntegerMatrix matrix_from_quiver(const Quiver& q);

/// Same signed count as matrix_from_quiver but defined for any quiver.
[[nodiscard]] IntegerMatrix net_arrow_matrix(const Quiver& q);

/// Entry (i,j) counts the arrows i -> j.
[[nodiscard]] IntegerMatrix arrow_multiplicities(const Quiver& q);

[[nodiscard]] bool is_two_acyclic(const Quiver& q);

/// True iff some arrow pair forms a 2-cycle through `k`.
[[nodiscard]] bool has_two_cycle_at(const Quiver& q, std::size_t k);

/// Name of the arrow replacing `a` under premutation.
[[nodiscard]] std::string reversed_arrow_name(std::string_view a);
/// Name of the composite arrow for the hook `ab` (t(a) = k = h(b)).
[[nodiscard]] std::string hook_arrow_name(std::string_view a, std::string_view b);

/// Steps 1-2 of quiver mutation: composite arrows for every hook through k,
/// arrows at k reversed. Throws PreconditionError on a 2-cycle at k.
[[nodiscard]] Quiver premutate_quiver(const Quiver& q, std::string_view k);

/// Removes a maximal collection of disjoint 2-cycles, pairing opposite arrows
/// in increasing id order for each vertex pair.
[[nodiscard]] Quiver remove_two_cycles(const Quiver& q);

[[nodiscard]] Quiver mutate_quiver(const Quiver& q, std::string_view k);

/// Matrix mutation by the entrywise exchange rule.
[[nodiscard]] IntegerMatrix mutate_matrix(const IntegerMatrix& b, std::string_view k);

// Text formats. Quiver: "v <id>" and "a <id> <tail> <head>" lines; "#" opens a
// comment at the start of a token (arrow ids such as "1>2#1" keep theirs).
// Matrix: whitespace-separated integer rows; vertices are named 1..n.
void write_quiver(std::ostream& out, const Quiver& q);
[[nodiscard]] Quiver parse_quiver(std::string_view text);
void write_matrix(std::ostream& out, const IntegerMatrix& m, bool with_header = true);
[[nodiscard]] IntegerMatrix parse_matrix(std::string_view text);

}  // namespace qpsurf

#endif  // QPSURF_QUIVER_HPP
