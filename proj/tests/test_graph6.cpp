#include <doctest.h>

#include <fstream>
#include <random>

#include "minrank/error.hpp"
#include "minrank/graph6.hpp"
#include "minrank/named_graphs.hpp"
#include "oracles.hpp"

using namespace minrank;
using namespace minrank::testing;

TEST_CASE("hand-decoded examples") {
    // 'A' = 65 -> n = 2; '_' = 95 -> payload 32 = 100000b, the single pair (0,1) present.
    CHECK(from_graph6("A_") == complete_graph(2));
    // 'D' = 68 -> n = 5; ten pair bits spread over two zero bytes.
    CHECK(from_graph6("D??") == Graph(5));
    CHECK(from_graph6("@") == Graph(1));
    CHECK(to_graph6(complete_graph(2)) == "A_");
    CHECK(to_graph6(Graph(1)) == "@");
    // K4: six pair bits all set -> one byte 63 + 63 = '~'.
    CHECK(to_graph6(complete_graph(4)) == "C~");
    // Column-major pair order: (0,1) (0,2) (1,2) (0,3) ... for P4 0-1-2-3 the bits are 1 0 1 0 0 1.
    CHECK(to_graph6(path_graph(4)) == std::string(1, static_cast<char>(63 + 4)) + static_cast<char>(63 + 0b101001));
}

TEST_CASE("malformed input names the byte offset") {
    auto offset_of = [](std::string_view text) {
        try {
            from_graph6(text);
        } catch (const ParseError& e) {
            return static_cast<long>(e.position());
        }
        return -1L;
    };
    CHECK(offset_of("") == 0);
    CHECK(offset_of(" _") == 0);      // byte below 63
    CHECK(offset_of("D?") == 2);      // truncated, wants 3 bytes
    CHECK(offset_of("A__") == 2);     // trailing garbage
    CHECK(offset_of("D?\x7f") == 2);  // payload byte above 126
    CHECK(offset_of("~") == 0);       // multi-byte order form
}

TEST_CASE("round trip on random graphs of order <= 7") {
    std::mt19937 rng(1);
    for (int trial = 0; trial < 1000; ++trial) {
        const Graph g = random_small_graph(rng, 7);
        CHECK(from_graph6(to_graph6(g)) == g);
    }
}

TEST_CASE("round trip on larger graphs") {
    std::mt19937 rng(2);
    for (int n : {8, 13, 30, 62}) {
        const Graph g = random_graph(rng, n, 0.4);
        CHECK(from_graph6(to_graph6(g)) == g);
    }
    CHECK_THROWS_AS(to_graph6(Graph(63)), std::invalid_argument);
}

TEST_CASE("round trip on the bundled corpus") {
    std::ifstream in(data_path("atlas.g6"));
    REQUIRE(in);
    std::string line;
    int count = 0;
    while (std::getline(in, line)) {
        CHECK(to_graph6(from_graph6(line)) == line);
        ++count;
    }
    CHECK(count == 1252);
}
