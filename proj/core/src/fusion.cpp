#include "vblocks/fusion.hpp"

#include "vblocks/errors.hpp"

#include <json.hpp> // vendored nlohmann::json

#include <algorithm>

namespace vblocks {

using nlohmann::json;

FusionRing::FusionRing(std::vector<std::string> labels, std::size_t vacuum,
                       std::vector<std::size_t> dual, std::vector<Rational> weights,
                       Rational central_charge)
    : labels_(std::move(labels)),
      vacuum_(vacuum),
      dual_(std::move(dual)),
      weights_(std::move(weights)),
      central_charge_(std::move(central_charge)) {
    if (labels_.empty()) throw InvalidCatalogError("FusionRing: empty label set");
    if (vacuum_ >= labels_.size()) throw InvalidCatalogError("FusionRing: vacuum out of range");
    if (dual_.size() != labels_.size() || weights_.size() != labels_.size())
        throw InvalidCatalogError("FusionRing: dual/weights size mismatch");
    for (std::size_t d : dual_)
        if (d >= labels_.size()) throw InvalidCatalogError("FusionRing: dual out of range");
}

std::optional<std::size_t> FusionRing::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    return std::nullopt;
}

long FusionRing::n(std::size_t a, std::size_t b, std::size_t c) const {
    auto it = n_.find({a, b, c});
    return it == n_.end() ? 0 : it->second;
}

void FusionRing::set_n(std::size_t a, std::size_t b, std::size_t c, long m) {
    if (m == 0)
        n_.erase({a, b, c});
    else
        n_[{a, b, c}] = m;
}

void FusionRing::set_n_symmetric(std::size_t a, std::size_t b, std::size_t c, long m) {
    std::array<std::size_t, 3> t{a, b, c};
    std::sort(t.begin(), t.end());
    do {
        set_n(t[0], t[1], t[2], m);
    } while (std::next_permutation(t.begin(), t.end()));
}

std::string ValidationReport::str() const {
    if (ok()) return "ok";
    std::string s;
    for (const auto& issue : issues) {
        s += issue.constraint + " (";
        for (std::size_t i = 0; i < issue.witness.size(); ++i) {
            if (i) s += ", ";
            s += issue.witness[i];
        }
        s += "): " + issue.message + "\n";
    }
    return s;
}

ValidationReport validate_fusion(const FusionRing& ring) {
    ValidationReport report;
    const std::size_t n = ring.size();
    auto lbl = [&](std::size_t i) { return ring.label(i); };

    if (ring.dual(ring.vacuum()) != ring.vacuum())
        report.issues.push_back(
            {"dual-involution", {lbl(ring.vacuum())}, "vacuum is not self-dual"});
    for (std::size_t a = 0; a < n; ++a) {
        if (ring.dual(ring.dual(a)) != a) {
            report.issues.push_back({"dual-involution", {lbl(a)}, "dual is not an involution"});
        }
    }

    for (const auto& [t, m] : ring.tensor()) {
        if (m < 0)
            report.issues.push_back({"non-negative",
                                     {lbl(t[0]), lbl(t[1]), lbl(t[2])},
                                     "negative multiplicity " + std::to_string(m)});
    }

    // unit law: N(V, W, Y) = 1 iff Y = W'
    for (std::size_t w = 0; w < n; ++w) {
        for (std::size_t y = 0; y < n; ++y) {
            const long expected = (y == ring.dual(w)) ? 1 : 0;
            const long got = ring.n(ring.vacuum(), w, y);
            if (got != expected)
                report.issues.push_back({"unit-law",
                                         {lbl(ring.vacuum()), lbl(w), lbl(y)},
                                         "N = " + std::to_string(got) + ", expected " +
                                             std::to_string(expected)});
        }
    }

    // full S_3 symmetry on ordered triples
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b)
            for (std::size_t c = b; c < n; ++c) {
                const long base = ring.n(a, b, c);
                std::array<std::size_t, 3> t{a, b, c};
                std::sort(t.begin(), t.end());
                bool bad = false;
                do {
                    if (ring.n(t[0], t[1], t[2]) != base) bad = true;
                } while (std::next_permutation(t.begin(), t.end()));
                if (bad)
                    report.issues.push_back(
                        {"symmetry", {lbl(a), lbl(b), lbl(c)}, "tensor not S_3-symmetric"});
            }

    // 4-point associativity, i.e. independence of the pairing
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = 0; d < n; ++d) {
                    long lhs = 0;
                    long rhs = 0;
                    for (std::size_t t = 0; t < n; ++t) {
                        lhs += ring.n(a, b, t) * ring.n(ring.dual(t), c, d);
                        rhs += ring.n(a, c, t) * ring.n(ring.dual(t), b, d);
                    }
                    if (lhs != rhs) {
                        report.issues.push_back({"associativity",
                                                 {lbl(a), lbl(b), lbl(c), lbl(d)},
                                                 std::to_string(lhs) + " != " +
                                                     std::to_string(rhs)});
                        if (report.issues.size() > 64) return report; // enough witnesses
                    }
                }

    return report;
}

FusionRing fusion_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const std::exception& e) {
        throw InvalidCatalogError(std::string("fusion document: parse error: ") + e.what());
    }

    try {
        std::vector<std::string> labels = doc.at("labels").get<std::vector<std::string>>();
        auto find = [&](const std::string& l) -> std::size_t {
            auto it = std::find(labels.begin(), labels.end(), l);
            if (it == labels.end())
                throw InvalidCatalogError("fusion document: unknown label '" + l + "'");
            return static_cast<std::size_t>(it - labels.begin());
        };

        const std::size_t vacuum = find(doc.at("vacuum").get<std::string>());

        std::vector<std::size_t> dual(labels.size());
        for (std::size_t i = 0; i < labels.size(); ++i) dual[i] = i;
        if (doc.contains("dual"))
            for (const auto& pair : doc.at("dual")) {
                const std::size_t a = find(pair.at(0).get<std::string>());
                const std::size_t b = find(pair.at(1).get<std::string>());
                dual[a] = b;
                dual[b] = a;
            }

        std::vector<Rational> weights(labels.size(), Rational(0));
        if (doc.contains("weights"))
            for (const auto& [l, w] : doc.at("weights").items())
                weights[find(l)] = Rational::parse(w.get<std::string>());

        Rational c(0);
        if (doc.contains("central_charge"))
            c = Rational::parse(doc.at("central_charge").get<std::string>());

        FusionRing ring(labels, vacuum, std::move(dual), std::move(weights), c);
        if (doc.contains("fusion"))
            for (const auto& entry : doc.at("fusion")) {
                const std::size_t a = find(entry.at(0).get<std::string>());
                const std::size_t b = find(entry.at(1).get<std::string>());
                const std::size_t cc = find(entry.at(2).get<std::string>());
                ring.set_n_symmetric(a, b, cc, entry.at(3).get<long>());
            }
        return ring;
    } catch (const InvalidCatalogError&) {
        throw;
    } catch (const std::exception& e) {
        throw InvalidCatalogError(std::string("fusion document: ") + e.what());
    }
}

std::string fusion_to_json(const FusionRing& ring, const std::string& provenance) {
    json doc;
    doc["labels"] = ring.labels();
    doc["vacuum"] = ring.label(ring.vacuum());
    json dual = json::array();
    for (std::size_t a = 0; a < ring.size(); ++a)
        if (a <= ring.dual(a)) dual.push_back({ring.label(a), ring.label(ring.dual(a))});
    doc["dual"] = dual;
    doc["central_charge"] = ring.central_charge().str();
    json weights = json::object();
    for (std::size_t a = 0; a < ring.size(); ++a) weights[ring.label(a)] = ring.weight(a).str();
    doc["weights"] = weights;
    json fusion = json::array();
    for (const auto& [t, m] : ring.tensor()) {
        if (!(t[0] <= t[1] && t[1] <= t[2])) continue; // one canonical listing per triple
        fusion.push_back({ring.label(t[0]), ring.label(t[1]), ring.label(t[2]), m});
    }
    doc["fusion"] = fusion;
    if (!provenance.empty()) doc["provenance_notes"] = provenance;
    return doc.dump(2);
}

} // namespace vblocks
