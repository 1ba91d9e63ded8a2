// Catalog of built-in test problems: initial-data samplers plus the default
// parameter set each test was defined with. Config files select a test by id
// and may override any default.
#ifndef COSMOFV_INITIAL_CONDITIONS_HPP
#define COSMOFV_INITIAL_CONDITIONS_HPP

#include <string>
#include <utility>
#include <vector>

#include "core/geometry.hpp"
#include "core/types.hpp"

namespace cosmofv {

struct BuiltinTest {
    std::string id;
    int dim = 1;
    std::string summary;
    std::vector<std::pair<std::string, std::string>> defaults;  // config key/value pairs
};

const std::vector<BuiltinTest>& builtin_tests();
const BuiltinTest* find_builtin(const std::string& id);

// Point evaluation of the named profile; steady profiles read the geometry.
// Throws DomainError for unknown ids or a dimension mismatch.
Prim1 sample_ic_1d(const std::string& id, double x, const Geometry& geom);
Prim2 sample_ic_2d(const std::string& id, double x, double y, const Geometry& geom);

}  // namespace cosmofv

#endif
