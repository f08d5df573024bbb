#include "support/corpus.hpp"

#include <doctest.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Result {
	int         status = -1;
	std::string out;
};

// Runs plpc with args (shell syntax), capturing standard output only.
Result plpc(const std::string& args, const std::string& input_cmd = "") {
	std::string cmd = input_cmd + std::string(PLPC_PATH) + " " + args + " 2>/dev/null";
	Result r;
	FILE* pipe = ::popen(cmd.c_str(), "r");
	REQUIRE(pipe != nullptr);
	std::array<char, 4096> buf{};
	std::size_t n;
	while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) { r.out.append(buf.data(), n); }
	int st = ::pclose(pipe);
	r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
	return r;
}

std::string corpus(const char* name) { return std::string(PLP_CORPUS_DIR) + "/" + name; }

// plpc reading text from standard input
Result plpc_stdin(const std::string& text, const std::string& args = "") {
	return plpc("- " + args, "printf '%s' '" + text + "' | ");
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("penguin, internal solver, nice") {
	auto r = plpc(corpus("penguin.olp") + " --solve internal --nice");
	CHECK(r.status == 0);
	CHECK(r.out == "{bird(tweety), neg flies(tweety), penguin(tweety)}\n");
}

TEST_CASE("cars") {
	auto r = plpc(corpus("cars.olp") + " --solve internal --nice");
	CHECK(r.status == 0);
	CHECK(r.out == "{neg expensive, powerful, safe}\n");
}

TEST_CASE("birds prints four sets") {
	auto r = plpc(corpus("birds.olp") + " --solve internal --nice");
	CHECK(r.status == 0);
	CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 4);
}

TEST_CASE("compiling is the default") {
	auto r = plpc(corpus("penguin.olp"));
	CHECK(r.status == 0);
	CHECK(r.out.rfind("penguin(tweety).\nbird(tweety).\nprec(1, 2).\n", 0) == 0);
}

TEST_CASE("empty program") {
	CHECK(plpc("- --solve internal < /dev/null").out == "{}\n");
	auto r = plpc("- < /dev/null");
	CHECK(r.status == 0);
	CHECK(r.out.empty());
}

TEST_CASE("ground only") {
	auto r = plpc(corpus("birds.olp") + " --ground-only --emit core");
	CHECK(r.status == 0);
	CHECK(r.out.find("name(r1_tweety)") != std::string::npos);
	CHECK(r.out.find("ap(") == std::string::npos);
}

TEST_CASE("verbose banners") {
	auto r = plpc(corpus("penguin.olp") + " --verbose");
	auto g = r.out.find("%% stage: ground\n");
	auto f = r.out.find("%% stage: flatten\n");
	auto c = r.out.find("%% stage: compile\n");
	CHECK(g != std::string::npos);
	CHECK(f != std::string::npos);
	CHECK(c != std::string::npos);
	CHECK(g < f);
	CHECK(f < c);
}

TEST_CASE("output is deterministic") {
	auto a = plpc(corpus("birds.olp") + " --emit smodels");
	auto b = plpc(corpus("birds.olp") + " --emit smodels");
	CHECK(a.out == b.out);
	CHECK(plpc(corpus("birds.olp") + " --solve internal").out == plpc(corpus("birds.olp") + " --solve internal").out);
}

TEST_CASE("exit codes") {
	CHECK(plpc("/nonexistent.olp").status == 1);
	CHECK(plpc("--emit nope " + corpus("penguin.olp")).status == 1);
	CHECK(plpc_stdin("p :- q").status == 1);
	CHECK(plpc_stdin("p(X) :- q(X).").status == 1);
	CHECK(plpc_stdin("ok(a).").status == 1);
	CHECK(plpc(corpus("penguin.olp") + " --solve external").status == 1);
	CHECK(plpc(corpus("penguin.olp") + " --solve external --external-cmd false").status == 2);
	CHECK(plpc(corpus("birds.olp") + " --solve internal --budget 5").status == 2);
}

}
