#pragma once

#include <map>
#include <string>

#include "spirality/construct.hpp"
#include "spirality/surface.hpp"

namespace spirality {

/// A manifold/surface pair plus optional named cycles, as stored on disk.
struct PairDocument {
    HorizontalSurface surface; // carries the manifold
    std::map<std::string, Cycle> cycles;

    friend bool operator==(const PairDocument& x, const PairDocument& y) {
        return x.surface == y.surface && x.cycles == y.cycles;
    }
    friend bool operator!=(const PairDocument& x, const PairDocument& y) { return !(x == y); }
};

/// Parses the JSON pair format. Structural problems (bad JSON, missing or
/// mistyped fields, duplicate ids) throw DocumentError; semantic problems
/// (dangling references, broken matrices) parse fine and are left to the
/// validators. Integers may be written as JSON numbers or, beyond int64
/// range, as decimal strings. The manifold's closed flag is derived from
/// the gluing data.
PairDocument parse_document(const std::string& text);

/// Canonical rendering: fixed key order, arrays sorted by id, two-space
/// indentation, trailing newline. Byte-identical across runs for equal
/// documents. Integers that fit in int64 are written as numbers, larger
/// ones as decimal strings.
std::string serialize_document(const PairDocument& doc);

/// Document for one family member, with its cycle stored under "gamma".
PairDocument family_document(const FamilySpec& spec);

} // namespace spirality
