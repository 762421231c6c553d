#include "hirz/workspace.hpp"

#include <string>
#include <utility>
#include <vector>

#include "hirz/error.hpp"

namespace hirz {

using nlohmann::ordered_json;

namespace {

long require_int(const ordered_json& v, const std::string& what) {
    if (!v.is_number_integer())
        throw DomainError("workspace: " + what + " must be an integer");
    return v.get<long>();
}

std::string require_string(const ordered_json& v, const std::string& what) {
    if (!v.is_string()) throw DomainError("workspace: " + what + " must be a string");
    return v.get<std::string>();
}

Rational coefficient_from_json(const ordered_json& v, const std::string& what) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    throw DomainError("workspace: " + what + " entries must be integers or strings");
}

}  // namespace

Workspace::Workspace(int ambient) : ambient_(ambient) {
    if (ambient < 1) throw DomainError("workspace ambient dimension must be at least 1");
}

void Workspace::check_fresh_name(const std::string& name) const {
    if (name.empty()) throw DomainError("workspace: names must be nonempty");
    for (const auto& b : bundles_)
        if (b.name == name) throw DomainError("workspace: duplicate name '" + name + "'");
    for (const auto& s : surfaces_)
        if (s.first == name) throw DomainError("workspace: duplicate name '" + name + "'");
    for (const auto& c : curves_)
        if (c.first == name) throw DomainError("workspace: duplicate name '" + name + "'");
}

const TrackedBundle* Workspace::find_bundle(const std::string& name) const {
    for (const auto& b : bundles_)
        if (b.name == name) return &b.bundle;
    return nullptr;
}

Workspace Workspace::from_json(const ordered_json& doc) {
    if (!doc.is_object()) throw DomainError("workspace: document must be a JSON object");
    if (!doc.contains("version") || !doc["version"].is_number_integer() ||
        doc["version"].get<long>() != 1)
        throw DomainError("workspace: unsupported document version (expected 1)");
    if (!doc.contains("ambient"))
        throw DomainError("workspace: missing field 'ambient'");
    const long n = require_int(doc["ambient"], "'ambient'");
    if (n < 1 || n > 64)
        throw DomainError("workspace: 'ambient' must be between 1 and 64");
    Workspace ws(static_cast<int>(n));

    if (doc.contains("bundles")) {
        if (!doc["bundles"].is_array())
            throw DomainError("workspace: 'bundles' must be an array");
        for (const auto& b : doc["bundles"]) {
            if (!b.is_object() || !b.contains("name"))
                throw DomainError("workspace: each bundle needs a 'name'");
            std::string name = require_string(b["name"], "bundle name");
            ws.check_fresh_name(name);
            if (b.contains("line")) {
                Integer d(require_int(b["line"], "'line'"));
                ws.bundles_.push_back({BundleDecl::Form::Line, std::move(name), {d},
                                       tracked_line(ws.ambient_, d)});
            } else if (b.contains("sum-of-lines")) {
                const auto& arr = b["sum-of-lines"];
                if (!arr.is_array() || arr.empty())
                    throw DomainError(
                        "workspace: 'sum-of-lines' must be a nonempty array of integers");
                std::vector<Integer> twists;
                for (const auto& t : arr)
                    twists.emplace_back(require_int(t, "'sum-of-lines'"));
                TrackedBundle acc = tracked_line(ws.ambient_, twists[0]);
                for (std::size_t i = 1; i < twists.size(); ++i)
                    acc = tracked_sum(acc, tracked_line(ws.ambient_, twists[i]));
                ws.bundles_.push_back({BundleDecl::Form::SumOfLines, std::move(name),
                                       std::move(twists), std::move(acc)});
            } else if (b.contains("rank") && b.contains("chern")) {
                const long rank = require_int(b["rank"], "'rank'");
                if (rank < 0 || rank > 1000)
                    throw DomainError("workspace: 'rank' must be between 0 and 1000");
                const auto& arr = b["chern"];
                if (!arr.is_array())
                    throw DomainError("workspace: 'chern' must be an array");
                std::vector<Rational> parts(static_cast<std::size_t>(ws.ambient_) + 1,
                                            Rational(0));
                for (std::size_t k = 0; k < arr.size(); ++k) {
                    if (k > static_cast<std::size_t>(ws.ambient_))
                        throw DomainError(
                            "workspace: 'chern' has more entries than the ambient "
                            "dimension allows");
                    parts[k] = coefficient_from_json(arr[k], "'chern'");
                }
                BundleClass bc(ws.ambient_, static_cast<int>(rank),
                               ChowClass(ws.ambient_, parts));
                ws.bundles_.push_back({BundleDecl::Form::Explicit, std::move(name), {},
                                       TrackedBundle(std::move(bc))});
            } else {
                throw DomainError("workspace: bundle '" + name +
                                  "' needs 'line', 'sum-of-lines', or 'rank' + 'chern'");
            }
        }
    }

    if (doc.contains("surfaces")) {
        if (!doc["surfaces"].is_array())
            throw DomainError("workspace: 'surfaces' must be an array");
        for (const auto& s : doc["surfaces"]) {
            if (!s.is_object() || !s.contains("name"))
                throw DomainError("workspace: each surface needs a 'name'");
            std::string name = require_string(s["name"], "surface name");
            ws.check_fresh_name(name);
            for (const char* key : {"basis", "pairing", "canonical", "c2"})
                if (!s.contains(key))
                    throw DomainError("workspace: surface '" + name +
                                      "' needs a '" + key + "' field");
            if (!s["basis"].is_array() || !s["pairing"].is_array() ||
                !s["canonical"].is_array())
                throw DomainError("workspace: surface '" + name +
                                  "' has a malformed field");
            std::vector<std::string> basis;
            for (const auto& v : s["basis"])
                basis.push_back(require_string(v, "surface basis entry"));
            std::vector<std::vector<Integer>> pairing;
            for (const auto& row : s["pairing"]) {
                if (!row.is_array())
                    throw DomainError("workspace: surface pairing rows must be arrays");
                std::vector<Integer> r;
                for (const auto& v : row)
                    r.emplace_back(require_int(v, "surface pairing entry"));
                pairing.push_back(std::move(r));
            }
            std::vector<Integer> canonical;
            for (const auto& v : s["canonical"])
                canonical.emplace_back(require_int(v, "surface canonical entry"));
            Integer c2(require_int(s["c2"], "surface 'c2'"));
            ws.surfaces_.emplace_back(
                std::move(name), SurfaceContext(basis, pairing, canonical, c2));
        }
    }

    if (doc.contains("curves")) {
        if (!doc["curves"].is_array())
            throw DomainError("workspace: 'curves' must be an array");
        for (const auto& c : doc["curves"]) {
            if (!c.is_object() || !c.contains("name") || !c.contains("genus"))
                throw DomainError("workspace: each curve needs 'name' and 'genus'");
            std::string name = require_string(c["name"], "curve name");
            ws.check_fresh_name(name);
            const long g = require_int(c["genus"], "curve 'genus'");
            ws.curves_.emplace_back(std::move(name), CurveContext(g));
        }
    }

    return ws;
}

ordered_json Workspace::to_json() const {
    ordered_json doc;
    doc["version"] = 1;
    doc["ambient"] = ambient_;
    if (!bundles_.empty()) {
        doc["bundles"] = ordered_json::array();
        for (const auto& b : bundles_) {
            ordered_json e;
            e["name"] = b.name;
            switch (b.form) {
                case BundleDecl::Form::Line:
                    e["line"] = b.twists[0].get_si();
                    break;
                case BundleDecl::Form::SumOfLines: {
                    ordered_json arr = ordered_json::array();
                    for (const Integer& t : b.twists) arr.push_back(t.get_si());
                    e["sum-of-lines"] = std::move(arr);
                    break;
                }
                case BundleDecl::Form::Explicit: {
                    e["rank"] = b.bundle.bundle.rank();
                    ordered_json arr = ordered_json::array();
                    for (int k = 0; k <= ambient_; ++k)
                        arr.push_back(b.bundle.bundle.chern_coeff(k).str());
                    e["chern"] = std::move(arr);
                    break;
                }
            }
            doc["bundles"].push_back(std::move(e));
        }
    }
    if (!surfaces_.empty()) {
        doc["surfaces"] = ordered_json::array();
        for (const auto& [name, ctx] : surfaces_) {
            ordered_json e;
            e["name"] = name;
            e["basis"] = ctx.basis_names();
            ordered_json pairing = ordered_json::array();
            for (const auto& row : ctx.pairing()) {
                ordered_json r = ordered_json::array();
                for (const Integer& v : row) r.push_back(v.get_si());
                pairing.push_back(std::move(r));
            }
            e["pairing"] = std::move(pairing);
            ordered_json canonical = ordered_json::array();
            for (const Integer& v : ctx.canonical()) canonical.push_back(v.get_si());
            e["canonical"] = std::move(canonical);
            e["c2"] = ctx.c2_integral().get_si();
            doc["surfaces"].push_back(std::move(e));
        }
    }
    if (!curves_.empty()) {
        doc["curves"] = ordered_json::array();
        for (const auto& [name, ctx] : curves_) {
            ordered_json e;
            e["name"] = name;
            e["genus"] = ctx.genus();
            doc["curves"].push_back(std::move(e));
        }
    }
    return doc;
}

}  // namespace hirz
