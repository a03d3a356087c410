#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knights/lift.hpp"
#include "knights/tour.hpp"

namespace knights {

// Bit-exact tour interchange record. Canonical key order, integers only,
// so equal tours always produce identical bytes.
struct TourDocument {
    int format_version = 1;
    Topology topology = Topology::Regular;
    int m = 1;
    int n = 1;
    bool closed = true;
    Square start{0, 0};
    std::vector<KnightPair> moves;
    std::optional<HomotopyClass> declared_class;

    bool operator==(const TourDocument &) const = default;
};

std::string topology_name(Topology t);
Topology topology_from_name(const std::string &name);

// builds the document for a valid tour; closed surface tours carry their class
TourDocument make_document(const Tour &tour);

// canonical JSON bytes; parsing then re-emitting is byte-identical
std::string document_bytes(const TourDocument &doc);
TourDocument parse_document(const std::string &bytes);

// reconstructs and validates the tour; a declared class must be confirmed
Tour to_tour(const TourDocument &doc);

std::string serialize_tour(const Tour &tour);
Tour deserialize_tour(const std::string &bytes);

// fnv-1a 64-bit of the given bytes, as 16 lowercase hex digits
std::string checksum_hex(const std::string &bytes);
std::string tour_checksum(const Tour &tour);

} // namespace knights
