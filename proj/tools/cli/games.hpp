#pragma once

// One queried position of any supported game, behind a common interface so
// that remoteness/sg queries and compound specs share the same code path.

#include <cstddef>
#include <filesystem>
#include <memory>
#include <optional>

#include <json.hpp>

#include "impartial/explicit_game.hpp"
#include "impartial/integer.hpp"
#include "impartial/values.hpp"

namespace impartial::cli {

using Json = nlohmann::ordered_json;

/// Integers below 2^53 in magnitude as JSON numbers, larger ones as strings.
Json json_integer(const Integer& value);

/// Accepts a non-negative JSON integer or a decimal string.
Integer integer_field(const Json& doc, const char* key);

class Game {
 public:
  virtual ~Game() = default;

  /// Position JSON including the "game" key.
  virtual Json position() const = 0;
  virtual Remoteness remoteness() = 0;
  /// SG value when it comes from a closed form or is already known.
  virtual std::optional<SgValue> cheap_sg() { return std::nullopt; }
  /// SG value, through the oracle when there is no closed form.
  virtual SgValue sg() = 0;
  /// Position JSON of a successor with remoteness one less.
  virtual std::optional<Json> optimal_move() = 0;
  virtual std::optional<Json> trace() { return std::nullopt; }
  /// Reachable game graph with node ids equal to position JSON dumps.
  virtual ExplicitGame explicit_graph() const = 0;

 protected:
  explicit Game(std::size_t max_nodes) : max_nodes_(max_nodes) {}
  std::size_t max_nodes_;
};

/// Builds a game from position JSON. Relative "file" entries resolve against
/// base_dir. Throws ParseError / ArgumentError.
std::unique_ptr<Game> game_from_json(const Json& doc, const std::filesystem::path& base_dir,
                                     std::size_t max_nodes);

std::string read_file(const std::filesystem::path& path);

/// {"game", "position", "remoteness", "class", "sg"?, "optimal_move"?, "trace"?}
Json query_result(Game& game, bool with_sg);

}  // namespace impartial::cli
