#include "doctest.h"
#include "fbkoszul.h"
#include "json.hpp"

#include <string>

namespace {

std::string take(char* s) {
    std::string r = s ? s : "";
    fbk_string_free(s);
    return r;
}

}  // namespace

TEST_CASE("C API session lifecycle and errors") {
    fbk_session* s = nullptr;
    char* err = nullptr;
    CHECK(fbk_session_open("builtin:com", 9, &s, &err) == FBK_BOUND_EXCEEDED);
    CHECK(s == nullptr);
    CHECK(!take(err).empty());
    CHECK(fbk_session_open("/nonexistent/operad.json", 3, &s, &err) == FBK_BAD_PRESENTATION);
    take(err);
    CHECK(fbk_session_open(nullptr, 3, &s, nullptr) == FBK_INVALID_ARGUMENT);

    REQUIRE(fbk_session_open("builtin:com", 3, &s, nullptr) == FBK_OK);
    CHECK(fbk_session_bound(s) == 3);
    CHECK(std::string(fbk_session_presentation_hash(s)).size() == 16);
    std::size_t n = 0;
    REQUIRE(fbk_dim(s, "catpu", 2, 2, 0, &n) == FBK_OK);
    CHECK(n == 4);
    REQUIRE(fbk_homology_dim(s, "relG", 2, 2, 0, &n) == FBK_OK);
    CHECK(n == 2);
    CHECK(fbk_dim(s, "catpu", 4, 0, 0, &n) == FBK_BOUND_EXCEEDED);
    CHECK(fbk_dim(s, "nothing", 1, 1, 0, &n) == FBK_INVALID_ARGUMENT);
    CHECK(std::string(fbk_session_error(s)).find("nothing") != std::string::npos);

    char* out = nullptr;
    REQUIRE(fbk_dims_json(s, "catp,dual", fbk_window{0, 3, 0, 3}, 2, &out) == FBK_OK);
    auto j = nlohmann::json::parse(take(out));
    CHECK(j["tables"].contains("catp"));
    CHECK(j["tables"].contains("dual"));
    CHECK(fbk_dims_json(s, nullptr, fbk_window{0, 4, 0, 3}, 1, &out) == FBK_BOUND_EXCEEDED);

    int pass = 0;
    REQUIRE(fbk_verify_json(s, "bgg-unit", fbk_window{0, 3, 0, 3}, 2, 0, &pass, &out) == FBK_OK);
    CHECK(pass == 1);
    take(out);
    REQUIRE(fbk_verify_json(s, "invariants", fbk_window{0, 3, 0, 3}, 2, 1, &pass, &out) == FBK_OK);
    CHECK(pass == 0);
    CHECK(take(out).find("(2,2)") != std::string::npos);
    CHECK(fbk_verify_json(s, "nope", fbk_window{0, 3, 0, 3}, 1, 0, &pass, &out) == FBK_INVALID_ARGUMENT);

    REQUIRE(fbk_export_json(s, "vk-kfi", fbk_window{2, 2, 2, 2}, &out) == FBK_OK);
    j = nlohmann::json::parse(take(out));
    CHECK(j["components"][0]["dim"] == 7);
    fbk_session_close(s);

    REQUIRE(fbk_session_open("builtin:unit", 3, &s, nullptr) == FBK_OK);
    CHECK(fbk_verify_json(s, "ce-compare", fbk_window{0, 3, 0, 3}, 1, 0, &pass, &out) == FBK_UNSUPPORTED);
    fbk_session_close(s);
}

TEST_CASE("C API name lists") {
    int k = 0;
    for (auto p = fbk_suite_names(); *p; ++p) ++k;
    CHECK(k == 6);
    CHECK(std::string(fbk_status_string(FBK_UNSUPPORTED)) == "unsupported");
    CHECK(fbk_max_bound() == 8);
}
