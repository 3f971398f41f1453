#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace bicoh {

enum class Conn : unsigned char { And, Or };

// Immutable formula over letters, top and bot. Copies share structure.
class Formula {
 public:
  enum class Kind : unsigned char { Letter, Top, Bot, And, Or };

  static Formula letter(std::string name);
  static Formula top();
  static Formula bot();
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula binary(Conn c, Formula a, Formula b);

  Kind kind() const;
  bool is_letter() const { return kind() == Kind::Letter; }
  bool is_top() const { return kind() == Kind::Top; }
  bool is_bot() const { return kind() == Kind::Bot; }
  bool is_conj() const { return kind() == Kind::And; }
  bool is_disj() const { return kind() == Kind::Or; }
  bool is_binary() const { return is_conj() || is_disj(); }
  Conn conn() const;  // binary nodes only

  const std::string& name() const;  // letters only
  const Formula& left() const;      // binary nodes only
  const Formula& right() const;     // binary nodes only

  // |A|: number of letter occurrences.
  std::size_t letters() const;
  std::size_t nodes() const;
  std::size_t hash() const;
  bool contains_top() const;
  bool contains_bot() const;
  bool contains_conj() const;
  bool contains_disj() const;

  std::string str() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

enum class Side : unsigned char { Left, Right };
using OccPath = std::vector<Side>;

std::string path_str(const OccPath& p);

// Occurrence j (1-based, letters only, left to right) with its letter.
std::vector<std::pair<int, std::string>> occurrences(const Formula& a);

const Formula& subformula_at(const Formula& a, const OccPath& at);
Formula replace_at(const Formula& a, const OccPath& at, const Formula& d);
// Number of letter occurrences strictly left of the subformula at `at`.
std::size_t offset_of(const Formula& a, const OccPath& at);
// Path of the leaf holding occurrence j (1-based).
OccPath path_of_occurrence(const Formula& a, int j);

Formula substitute(const Formula& a, const std::map<std::string, Formula>& sigma);
Formula substitute_all(const Formula& a, const Formula& d);
std::vector<std::string> letter_names(const Formula& a);

enum class Truth : unsigned char { Top, Bot };
Truth eval_letterless(const Formula& a);
bool is_contradiction(const Formula& a);
bool is_tautology(const Formula& a);
bool is_dnf(const Formula& a);
bool is_cnf(const Formula& a);
bool is_bot_normal(const Formula& a);
bool is_top_normal(const Formula& a);

// Swaps conj/disj and top/bot.
Formula dual(const Formula& a);

}  // namespace bicoh

template <>
struct std::hash<bicoh::Formula> {
  std::size_t operator()(const bicoh::Formula& f) const noexcept { return f.hash(); }
};
