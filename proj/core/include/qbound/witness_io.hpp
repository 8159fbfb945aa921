#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "qbound/measures.hpp"

namespace qbound {

using WitnessDocument =
    std::variant<measures::RelationalWitness, measures::WeightScheme,
                 measures::DistributionFamily, measures::Rank1Witness,
                 measures::DistanceScheme>;

/// Parses a witness file (JSON document with a "type" field, see
/// docs/formats.md). Words are validated against the function's arity and
/// alphabet; rationals are strings "p" or "p/q". Serialized indices are
/// 1-based. Throws SyntaxError on schema violations.
WitnessDocument parse_witness(std::string_view text, const PartialFunction& f);

std::string serialize_witness(const WitnessDocument& witness);

/// "relational", "weighted", "mm", "rank1" or "distance".
const char* witness_type_name(const WitnessDocument& witness);

WitnessDocument read_witness_file(const std::string& path, const PartialFunction& f);

}  // namespace qbound
