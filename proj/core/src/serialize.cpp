#include "knights/serialize.hpp"

#include <cstdint>
#include <cstdio>

#include <json.hpp>

#include "knights/errors.hpp"

namespace knights {

namespace {

using json = nlohmann::ordered_json;

int require_int(const json &j, const char *key) {
    auto it = j.find(key);
    if (it == j.end() || !it->is_number_integer())
        throw InvalidTour(std::string("tour document: missing integer field '") + key + "'");
    return it->get<int>();
}

std::pair<int, int> require_pair(const json &v, const char *what) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer())
        throw InvalidTour(std::string("tour document: ") + what + " must be a pair of integers");
    return {v[0].get<int>(), v[1].get<int>()};
}

} // namespace

std::string topology_name(Topology t) {
    switch (t) {
    case Topology::Regular: return "regular";
    case Topology::Cylinder: return "cylinder";
    case Topology::Torus: return "torus";
    }
    throw InvalidTour("tour document: unknown topology");
}

Topology topology_from_name(const std::string &name) {
    if (name == "regular") return Topology::Regular;
    if (name == "cylinder") return Topology::Cylinder;
    if (name == "torus") return Topology::Torus;
    throw InvalidTour("tour document: unknown topology '" + name + "'");
}

TourDocument make_document(const Tour &tour) {
    validate_tour(tour);
    TourDocument doc;
    doc.topology = tour.spec.topology;
    doc.m = tour.spec.m;
    doc.n = tour.spec.n;
    doc.closed = tour.closed;
    doc.start = tour.start;
    doc.moves.reserve(tour.jumps.size());
    for (const DirectedJump &j : tour.jumps) doc.moves.push_back(j.pair);
    if (tour.spec.topology != Topology::Regular && tour.closed)
        doc.declared_class = classify(tour);
    return doc;
}

std::string document_bytes(const TourDocument &doc) {
    json j;
    j["format_version"] = doc.format_version;
    j["topology"] = topology_name(doc.topology);
    j["m"] = doc.m;
    j["n"] = doc.n;
    j["closed"] = doc.closed;
    j["start"] = json::array({doc.start.a, doc.start.b});
    json moves = json::array();
    for (const KnightPair &p : doc.moves) moves.push_back(json::array({p.x, p.y}));
    j["moves"] = std::move(moves);
    if (doc.declared_class) {
        const HomotopyClass &c = *doc.declared_class;
        json cj;
        if (c.topology == Topology::Cylinder) {
            cj["k"] = c.k;
        } else {
            cj["p"] = c.p;
            cj["q"] = c.q;
        }
        j["class"] = std::move(cj);
    } else {
        j["class"] = nullptr;
    }
    return j.dump();
}

TourDocument parse_document(const std::string &bytes) {
    json j = json::parse(bytes, nullptr, false);
    if (j.is_discarded() || !j.is_object())
        throw InvalidTour("tour document: malformed JSON");

    TourDocument doc;
    doc.format_version = require_int(j, "format_version");
    if (doc.format_version != 1)
        throw InvalidTour("tour document: unsupported format_version");

    auto topo = j.find("topology");
    if (topo == j.end() || !topo->is_string())
        throw InvalidTour("tour document: missing topology string");
    doc.topology = topology_from_name(topo->get<std::string>());

    doc.m = require_int(j, "m");
    doc.n = require_int(j, "n");

    auto closed = j.find("closed");
    if (closed == j.end() || !closed->is_boolean())
        throw InvalidTour("tour document: missing boolean field 'closed'");
    doc.closed = closed->get<bool>();

    auto start = j.find("start");
    if (start == j.end()) throw InvalidTour("tour document: missing start");
    auto [sa, sb] = require_pair(*start, "start");
    doc.start = {sa, sb};

    auto moves = j.find("moves");
    if (moves == j.end() || !moves->is_array())
        throw InvalidTour("tour document: missing moves array");
    for (const json &mv : *moves) {
        auto [x, y] = require_pair(mv, "move");
        doc.moves.push_back({x, y});
    }

    auto cls = j.find("class");
    if (cls == j.end()) throw InvalidTour("tour document: missing class field");
    if (!cls->is_null()) {
        if (!cls->is_object()) throw InvalidTour("tour document: class must be null or object");
        if (cls->contains("k")) {
            doc.declared_class = HomotopyClass::cylinder(require_int(*cls, "k"));
        } else {
            doc.declared_class =
                HomotopyClass::torus(require_int(*cls, "p"), require_int(*cls, "q"));
        }
    }
    return doc;
}

Tour to_tour(const TourDocument &doc) {
    Tour tour;
    tour.spec = {doc.topology, doc.m, doc.n};
    tour.start = doc.start;
    tour.closed = doc.closed;
    Square cur = doc.start;
    for (const KnightPair &p : doc.moves) {
        DirectedJump jump{cur, p};
        tour.jumps.push_back(jump);
        try {
            cur = apply_jump(tour.spec, jump);
        } catch (const InvalidJump &e) {
            throw InvalidTour(std::string("tour document: ") + e.what());
        }
    }
    validate_tour(tour);
    if (doc.declared_class) {
        if (classify(tour) != *doc.declared_class)
            throw InvalidTour("tour document: declared class does not match the tour");
    }
    return tour;
}

std::string serialize_tour(const Tour &tour) { return document_bytes(make_document(tour)); }

Tour deserialize_tour(const std::string &bytes) { return to_tour(parse_document(bytes)); }

std::string checksum_hex(const std::string &bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string tour_checksum(const Tour &tour) { return checksum_hex(serialize_tour(tour)); }

} // namespace knights
