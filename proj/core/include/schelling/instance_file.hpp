#ifndef SCHELLING_INSTANCE_FILE_HPP
#define SCHELLING_INSTANCE_FILE_HPP

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "schelling/game.hpp"
#include "schelling/instances.hpp"
#include "schelling/tolerance.hpp"

namespace schelling {

/// In-memory form of the JSON instance document.
///
/// Topologies are always written as explicit edge lists (plus grid shape when
/// present); on input a generator spec is accepted instead. Rationals travel
/// as "p/q" strings.
struct InstanceFile {
    std::string name;
    GameInstance game;
    std::map<std::string, Assignment> assignments;
    /// Extra named tolerance vectors of the same length as the game's.
    std::map<std::string, ToleranceVector> tolerances;
    std::map<std::string, std::string> metadata;
};

InstanceFile to_instance_file(const NamedInstance& instance);

/// Errors: ParseError for malformed documents; validation errors of the
/// core types (InvalidGame, InvalidAssignment, ...) pass through.
InstanceFile parse_instance(std::string_view text);
std::string serialize_instance(const InstanceFile& file);

InstanceFile read_instance_file(const std::filesystem::path& path);
void write_instance_file(const std::filesystem::path& path, const InstanceFile& file);

/// Comma separated rationals, e.g. "1,1/2,0". Errors: ParseError plus the
/// ToleranceVector validation codes.
ToleranceVector parse_tolerance_list(std::string_view text);

}  // namespace schelling

#endif  // SCHELLING_INSTANCE_FILE_HPP
