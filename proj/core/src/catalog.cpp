#include "vblocks/catalog.hpp"

#include "vblocks/errors.hpp"
#include "vblocks/fock.hpp"

#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

namespace vblocks {

namespace {

void validate_or_throw(const CatalogEntry& entry) {
    auto report = validate_fusion(entry.ring);
    if (!report.ok())
        throw FusionValidationError("catalog '" + entry.name +
                                    "' failed fusion validation:\n" + report.str());
}

// admissible middle entries of the truncated Clebsch-Gordan ladder:
// x in {|a-b|+1, |a-b|+3, ..., min(a+b-1, 2m-1-a-b)}
bool bpz_admissible(long a, long b, long x, long m) {
    if ((a + b + x) % 2 == 0) return false;
    return x >= std::labs(a - b) + 1 && x <= std::min(a + b - 1, 2 * m - 1 - a - b);
}

} // namespace

CatalogEntry minimal_model(long p, long q) {
    if (!(1 < p && p < q) || std::gcd(p, q) != 1)
        throw InvalidCatalogError("minimal_model: need coprime 1 < p < q, got (" +
                                  std::to_string(p) + "," + std::to_string(q) + ")");
    if (p * q > 40)
        throw InvalidCatalogError("minimal_model: (p,q) outside the shipped range p*q <= 40");

    // canonical representative of (m,n) ~ (p-m, q-n)
    auto canon = [&](long m, long n) -> std::pair<long, long> {
        return std::min(std::make_pair(m, n), std::make_pair(p - m, q - n));
    };
    std::vector<std::pair<long, long>> reps;
    for (long m = 1; m < p; ++m)
        for (long n = 1; n < q; ++n)
            if (canon(m, n) == std::make_pair(m, n)) reps.emplace_back(m, n);

    std::vector<std::string> labels;
    std::vector<Rational> weights;
    for (const auto& [m, n] : reps) {
        labels.push_back(std::to_string(m) + "_" + std::to_string(n));
        // h_{m,n} = ((np - mq)^2 - (p - q)^2) / (4pq)
        const long t = n * p - m * q;
        weights.emplace_back(Rational(t * t - (p - q) * (p - q), 4 * p * q));
    }
    const Rational c = Rational(1) - Rational(6 * (p - q) * (p - q), p * q);

    std::vector<std::size_t> dual(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) dual[i] = i; // self-contragredient family

    auto index_of_pair = [&](long m, long n) -> std::size_t {
        const auto key = canon(m, n);
        for (std::size_t i = 0; i < reps.size(); ++i)
            if (reps[i] == key) return i;
        throw InvalidCatalogError("minimal_model: internal label lookup failure");
    };
    const std::size_t vac = index_of_pair(1, 1);

    FusionRing ring(labels, vac, dual, weights, c);
    // Tabulated BPZ fusion rule (standard minimal-model data; the validator
    // and the degeneration-invariance checks are the trust anchors).
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i; j < reps.size(); ++j) {
            const auto [m1, n1] = reps[i];
            const auto [m2, n2] = reps[j];
            for (long m3 = 1; m3 < p; ++m3)
                for (long n3 = 1; n3 < q; ++n3) {
                    if (canon(m3, n3) != std::make_pair(m3, n3)) continue;
                    bool adm = false;
                    // either representative of the third class may close the triple
                    for (const auto& [a, b] : {std::make_pair(m3, n3),
                                               std::make_pair(p - m3, q - n3)}) {
                        if (bpz_admissible(m1, m2, a, p) && bpz_admissible(n1, n2, b, q))
                            adm = true;
                    }
                    if (adm) ring.set_n_symmetric(i, j, index_of_pair(m3, n3), 1);
                }
        }

    CatalogEntry entry{CatalogFamily::VirasoroMinimal,
                       "virasoro:" + std::to_string(p) + "," + std::to_string(q),
                       std::move(ring),
                       "labels, c and weights from the Kac table; fusion tensor tabulated "
                       "from the standard BPZ truncated Clebsch-Gordan rule (external data, "
                       "validated at load)",
                       p,
                       q,
                       0,
                       0};
    validate_or_throw(entry);
    return entry;
}

CatalogEntry affine_sl2(long level) {
    if (level < 1) throw InvalidCatalogError("affine_sl2: level must be >= 1");

    std::vector<std::string> labels;
    std::vector<Rational> weights;
    std::vector<std::size_t> dual;
    for (long l = 0; l <= level; ++l) {
        labels.push_back(std::to_string(l));
        weights.emplace_back(Rational(l * (l + 2), 4 * (level + 2)));
        dual.push_back(static_cast<std::size_t>(l)); // sl2 weights are self-dual
    }
    FusionRing ring(labels, 0, dual, weights, Rational(3 * level, level + 2));
    // Tabulated truncated Clebsch-Gordan fusion:
    // N(a,b,c) = 1 iff |a-b| <= c <= min(a+b, 2*level-a-b) and a+b+c even.
    for (long a = 0; a <= level; ++a)
        for (long b = a; b <= level; ++b)
            for (long c = b; c <= level; ++c) {
                if ((a + b + c) % 2 != 0) continue;
                if (c > std::min(a + b, 2 * level - a - b) || c < b - a) continue;
                if (std::labs(a - b) > c) continue;
                ring.set_n_symmetric(static_cast<std::size_t>(a), static_cast<std::size_t>(b),
                                     static_cast<std::size_t>(c), 1);
            }

    CatalogEntry entry{CatalogFamily::AffineSl2,
                       "sl2:" + std::to_string(level),
                       std::move(ring),
                       "fusion tabulated from the truncated Clebsch-Gordan rule; weights "
                       "l(l+2)/(4(level+2)) are Sugawara data, external to the rank "
                       "computations",
                       0,
                       0,
                       level,
                       0};
    validate_or_throw(entry);
    return entry;
}

CatalogEntry lattice_catalog(long k) {
    if (k < 1) throw InvalidCatalogError("lattice_catalog: k must be >= 1");
    const long n = 2 * k;

    std::vector<std::string> labels;
    std::vector<Rational> weights;
    std::vector<std::size_t> dual;
    for (long j = 0; j < n; ++j) {
        labels.push_back(std::to_string(j));
        weights.push_back(lattice_conformal_weight(k, j)); // computed via the Fock L_0
        dual.push_back(static_cast<std::size_t>((n - j) % n));
    }
    // central charge read off the Fock realization (omega_(3) omega)
    const Rational c = FockVOA::lattice(k, 2).voa().central_charge();

    FusionRing ring(labels, 0, dual, weights, c);
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b)
            for (long cc = 0; cc < n; ++cc)
                if ((a + b + cc) % n == 0)
                    ring.set_n(static_cast<std::size_t>(a), static_cast<std::size_t>(b),
                               static_cast<std::size_t>(cc), 1);

    CatalogEntry entry{CatalogFamily::Lattice,
                       "lattice:" + std::to_string(k),
                       std::move(ring),
                       "group-law fusion on L'/L; weights and central charge computed from "
                       "the rank-1 Fock realization",
                       0,
                       0,
                       0,
                       k};
    validate_or_throw(entry);
    return entry;
}

CatalogEntry load_catalog_file(const std::string& path, bool force) {
    std::ifstream in(path);
    if (!in) throw InvalidCatalogError("cannot open catalog file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    FusionRing ring = fusion_from_json(buf.str());
    CatalogEntry entry{CatalogFamily::Custom, "file:" + path, std::move(ring),
                       "loaded from " + path, 0, 0, 0, 0};
    if (!force) {
        auto report = validate_fusion(entry.ring);
        if (!report.ok())
            throw FusionValidationError("catalog file '" + path + "' failed validation:\n" +
                                        report.str());
    }
    return entry;
}

CatalogEntry resolve_catalog(const std::string& selector, bool force) {
    const auto colon = selector.find(':');
    const std::string head = selector.substr(0, colon);
    const std::string rest = colon == std::string::npos ? "" : selector.substr(colon + 1);

    auto parse_long = [&](const std::string& s) -> long {
        try {
            std::size_t pos = 0;
            const long v = std::stol(s, &pos);
            if (pos != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw InvalidCatalogError("bad catalog selector '" + selector + "'");
        }
    };

    if (head == "lattice") return lattice_catalog(parse_long(rest));
    if (head == "sl2" || head == "affine_sl2") return affine_sl2(parse_long(rest));
    if (head == "virasoro") {
        const auto comma = rest.find(',');
        if (comma == std::string::npos)
            throw InvalidCatalogError("bad catalog selector '" + selector +
                                      "' (expected virasoro:P,Q)");
        return minimal_model(parse_long(rest.substr(0, comma)),
                             parse_long(rest.substr(comma + 1)));
    }
    if (head == "file") return load_catalog_file(rest, force);

    if (colon == std::string::npos) {
        const char* dir = std::getenv("VBLOCKS_CATALOG_DIR");
        if (dir != nullptr)
            return load_catalog_file(std::string(dir) + "/" + selector + ".json", force);
        throw InvalidCatalogError("unknown catalog '" + selector +
                                  "' and VBLOCKS_CATALOG_DIR is not set");
    }
    throw InvalidCatalogError("unknown catalog family '" + head + "'");
}

std::optional<std::size_t> resolve_label(const FusionRing& ring, const std::string& token) {
    if (auto i = ring.index_of(token)) return i;
    if (token == "V") return ring.vacuum();
    if (token == "X" && ring.size() == 2) return 1 - ring.vacuum();
    return std::nullopt;
}

} // namespace vblocks
