#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hirz/riemann_roch.hpp"

namespace hirz {

// Named objects shared by the CLI subcommands, loaded from a single JSON
// document:
//   { "version": 1, "ambient": n,
//     "bundles":  [ {"name": .., "line": d}
//                 | {"name": .., "sum-of-lines": [d..]}
//                 | {"name": .., "rank": r, "chern": ["1", ..]} ],
//     "surfaces": [ {"name": .., "basis": [..], "pairing": [[..]],
//                    "canonical": [..], "c2": ..} ],
//     "curves":   [ {"name": .., "genus": g} ] }
// Bundles declared through line/sum-of-lines carry their K-class; explicit
// rank+chern bundles do not.  Declaration order is preserved so a document
// round-trips through load/save unchanged.
class Workspace {
  public:
    explicit Workspace(int ambient);

    static Workspace from_json(const nlohmann::ordered_json& doc);
    nlohmann::ordered_json to_json() const;

    int ambient() const { return ambient_; }
    const TrackedBundle* find_bundle(const std::string& name) const;
    const std::vector<std::pair<std::string, SurfaceContext>>& surfaces() const {
        return surfaces_;
    }
    const std::vector<std::pair<std::string, CurveContext>>& curves() const { return curves_; }

  private:
    // how a bundle was declared, kept verbatim for serialization
    struct BundleDecl {
        enum class Form { Line, SumOfLines, Explicit } form;
        std::string name;
        std::vector<Integer> twists;  // Line (one entry) and SumOfLines
        TrackedBundle bundle;
    };

    int ambient_;
    std::vector<BundleDecl> bundles_;
    std::vector<std::pair<std::string, SurfaceContext>> surfaces_;
    std::vector<std::pair<std::string, CurveContext>> curves_;

    void check_fresh_name(const std::string& name) const;
};

}  // namespace hirz
