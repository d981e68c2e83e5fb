/*
   Copyright 2026 The cyclolc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "json.hpp"

#include "cyclolc/gf2poly.hpp"

namespace {

struct CommandResult {
    int exit_code = -1;
    std::string out;
};

CommandResult run_cli(const std::string& args, bool capture_stderr = false) {
    std::string cmd = std::string(CYCLOLC_CLI_PATH) + " " + args;
    cmd += capture_stderr ? " 2>&1" : " 2>/dev/null";
    CommandResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        return result;
    }
    char buffer[4096];
    size_t n = 0;
    while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
        result.out.append(buffer, n);
    }
    int status = pclose(pipe);
    if (WIFEXITED(status)) {
        result.exit_code = WEXITSTATUS(status);
    }
    return result;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string current;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    if (!current.empty()) {
        lines.push_back(current);
    }
    return lines;
}

bool contains(const std::string& text, const std::string& needle) {
    return text.find(needle) != std::string::npos;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("lc prints the complexity for every method") {
    for (const char* method : {"closed", "gcd", "bm", "smatrix"}) {
        CommandResult r = run_cli(std::string("lc --p 17 --q 41 --method ") + method);
        CHECK(r.exit_code == 0);
        std::vector<std::string> lines = split_lines(r.out);
        REQUIRE(!lines.empty());
        CHECK(lines[0] == "696");
    }
    CommandResult reversed = run_cli("lc --p 73 --q 17 --method gcd");
    CHECK(reversed.exit_code == 0);
    CHECK(split_lines(reversed.out)[0] == "916");
}

TEST_CASE("lc verbose reports the derivation") {
    CommandResult r = run_cli("lc --p 17 --q 41 --method closed --verbose", true);
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "g = 6"));
    CHECK(contains(r.out, "case = 1"));
    CHECK(contains(r.out, "696"));
}

TEST_CASE("lc rejects pairs outside the domain") {
    CommandResult r = run_cli("lc --p 17 --q 19 --method closed");
    CHECK(r.exit_code == 3);
    CommandResult composite = run_cli("lc --p 15 --q 41 --method closed");
    CHECK(composite.exit_code == 3);
}

TEST_CASE("usage errors exit with code two") {
    CHECK(run_cli("lc --p 17").exit_code == 2);
    CHECK(run_cli("lc --p 17 --q 41 --method bogus").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
}

TEST_CASE("help exits cleanly") {
    CommandResult r = run_cli("--help", true);
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "lc"));
}

TEST_CASE("verify covers the small prime pairs") {
    CommandResult r = run_cli("verify --max 100");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "PASS p=17 q=41"));
    CHECK(contains(r.out, "pairs=8 pass=8 fail=0"));
}

TEST_CASE("verify reports an empty range") {
    CommandResult r = run_cli("verify --max 16");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "no pairs"));
}

TEST_CASE("verify accepts a method subset and a seed") {
    CommandResult first =
        run_cli("verify --max 60 --methods closed,gcd,bm,smatrix --seed 42");
    CHECK(first.exit_code == 0);
    CHECK(contains(first.out, "L(p,q)=696"));
    CommandResult second =
        run_cli("verify --max 60 --methods closed,gcd,bm,smatrix --seed 42");
    CHECK(second.out == first.out);

    CHECK(run_cli("verify --max 60 --methods closed,bogus").exit_code == 2);
}

TEST_CASE("table emits the golden rows as csv") {
    CommandResult r = run_cli("table --max 500 --format csv");
    CHECK(r.exit_code == 0);
    std::vector<std::string> lines = split_lines(r.out);
    REQUIRE(lines.size() == 100);
    CHECK(lines[0] == "p,q,L_pq,L_qp");
    CHECK(lines[1] == "17,41,696,696");
    bool found = false;
    for (const std::string& line : lines) {
        if (line == "113,137,11672,15480") {
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("table below the smallest pair prints only the header") {
    CommandResult r = run_cli("table --max 40 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "p,q,L_pq,L_qp\n");
}

TEST_CASE("table renders json and markdown") {
    CommandResult json_result = run_cli("table --max 100 --format json");
    CHECK(json_result.exit_code == 0);
    nlohmann::json parsed = nlohmann::json::parse(json_result.out);
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == 8);
    CHECK(parsed[0]["p"] == 17);
    CHECK(parsed[0]["q"] == 41);
    CHECK(parsed[0]["L_pq"] == 696);
    CHECK(parsed[0]["L_qp"] == 696);

    CommandResult md = run_cli("table --max 100 --format markdown");
    CHECK(md.exit_code == 0);
    std::vector<std::string> lines = split_lines(md.out);
    REQUIRE(lines.size() >= 3);
    CHECK(contains(lines[0], "| p "));
    CHECK(contains(lines[1], "---"));
    CHECK(contains(md.out, "| 17 | 41 | 696 | 696 |"));
}

TEST_CASE("classify explains the twelve case dispatch") {
    CommandResult r = run_cli("classify --p 73 --q 17");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "Res(2,p) = 8"));
    CHECK(contains(r.out, "Res(2,q) = 2"));
    CHECK(contains(r.out, "Res(p,q) = 1"));
    CHECK(contains(r.out, "case = 12"));
    CHECK(contains(r.out, "L = 916"));

    CommandResult wide = run_cli("classify --p 17 --q 409");
    CHECK(wide.exit_code == 0);
    CHECK(contains(wide.out, "Res(2,p) = 2"));
    CHECK(contains(wide.out, "Res(2,q) = 2"));
    CHECK(contains(wide.out, "Res(p,q) = 8"));
    CHECK(contains(wide.out, "case = 1"));

    CHECK(run_cli("classify --p 17 --q 19").exit_code == 3);
}

TEST_CASE("seq prints ascii bits and packed bytes") {
    CommandResult ascii = run_cli("seq --p 3 --q 5 --format ascii");
    CHECK(ascii.exit_code == 0);
    std::string bits;
    for (char c : ascii.out) {
        if (c == '0' || c == '1') {
            bits.push_back(c);
        } else {
            CHECK(c == '\n');
        }
    }
    REQUIRE(bits.size() == 15);
    CHECK(bits == "001000111110010");

    CommandResult packed = run_cli("seq --p 3 --q 5 --format packed");
    CHECK(packed.exit_code == 0);
    REQUIRE(packed.out.size() == 2);
    // Little endian bit packing inside each byte.
    CHECK(static_cast<unsigned char>(packed.out[0]) == 0xc4);
    CHECK(static_cast<unsigned char>(packed.out[1]) == 0x27);
}

TEST_CASE("minpoly emits the hex minimal polynomial") {
    CommandResult r = run_cli("minpoly --p 17 --q 41");
    CHECK(r.exit_code == 0);
    std::vector<std::string> lines = split_lines(r.out);
    REQUIRE(!lines.empty());
    cyclolc::BitPolynomial m = cyclolc::from_hex(lines[0]);
    CHECK(m.degree() == 696);
    CHECK(m.coeff(0));
}

TEST_CASE("smatrix renders the grid of field elements") {
    CommandResult r = run_cli("smatrix --p 17 --q 41");
    CHECK(r.exit_code == 0);
    std::vector<std::string> lines = split_lines(r.out);
    REQUIRE(lines.size() == 9);
    for (const std::string& line : lines) {
        std::vector<std::string> tokens;
        std::string token;
        for (char c : line) {
            if (c == ' ') {
                if (!token.empty()) {
                    tokens.push_back(token);
                }
                token.clear();
            } else {
                token.push_back(c);
            }
        }
        if (!token.empty()) {
            tokens.push_back(token);
        }
        CHECK(tokens.size() == 9);
    }
    // The corner entry is always zero.
    std::string last = lines[8];
    CHECK(last.substr(last.rfind(' ') + 1) == "0");

    CommandResult too_big = run_cli("smatrix --p 113 --q 137");
    CHECK(too_big.exit_code == 3);
}

TEST_CASE("smatrix honors the degree guard") {
    CommandResult r = run_cli("lc --p 113 --q 137 --method smatrix");
    CHECK(r.exit_code == 3);
    CommandResult skipped = run_cli(
        "verify --max 60 --methods closed,smatrix --smatrix-max-degree 39");
    CHECK(skipped.exit_code == 0);
    CHECK(contains(skipped.out, "smatrix=SKIP"));
}

} // TEST_SUITE("cli")
