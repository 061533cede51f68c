#include "doctest.h"

#include <fstream>
#include <sstream>

#include "ncfgl/verify.hpp"

using namespace ncfgl;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "missing golden file: ", path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("figure reproduction matches the committed goldens byte for byte") {
    FglEngine eng(10);
    auto files = reproduce_figures(eng);
    auto again = reproduce_figures(eng);
    CHECK(files == again);
    REQUIRE(files.size() == 4);
    for (const auto& [name, body] : files) {
        CHECK(!body.empty());
        CHECK(body.back() == '\n');
        std::string want = slurp(std::string(NCFGL_GOLDEN_DIR) + "/" + name);
        CHECK_MESSAGE(body == want, "golden drift in ", name);
    }
}
