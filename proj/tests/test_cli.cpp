#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include <sys/wait.h>
#include <unistd.h>

// Drives the installed binary through a shell, the way users run it.

namespace {

const std::string kCli = NUMTRANS_CLI_PATH;
const std::string kFixtures = FIXTURES_DIR;

struct RunResult {
  int status = -1;
  std::string output;  // stdout and stderr interleaved
};

RunResult run_shell(const std::string& command) {
  std::string wrapped = command + " 2>&1";
  FILE* pipe = popen(wrapped.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
  int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

std::string temp_path(const std::string& stem) {
  return "/tmp/" + stem + "." + std::to_string(getpid());
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  REQUIRE(out.good());
  out << content;
}

}  // namespace

TEST_CASE("parse reports the canonical reading") {
  auto r = run_shell(kCli + " parse --lang zh '三千五百亿'");
  CHECK(r.status == 0);
  CHECK(r.output == "large_unit 350000000000\n");

  r = run_shell(kCli + " parse --lang en '72.2 billion'");
  CHECK(r.status == 0);
  CHECK(r.output == "large_unit 72200000000\n");

  r = run_shell(kCli + " parse --lang zh --format json '三千五百亿'");
  CHECK(r.status == 0);
  CHECK(r.output.find("\"large_unit\"") != std::string::npos);
  CHECK(r.output.find("350000000000") != std::string::npos);

  r = run_shell(kCli + " parse --lang en '1/4'");
  CHECK(r.status == 0);
  CHECK(r.output == "fraction 1 4\n");
}

TEST_CASE("parse failures exit nonzero with a located message") {
  auto r = run_shell(kCli + " parse --lang zh '美元'");
  CHECK(r.status == 1);
  CHECK(r.output.find("numtrans:") != std::string::npos);
  CHECK(r.output.find("offset") != std::string::npos);

  r = run_shell(kCli + " parse --lang zh '三万五'");
  CHECK(r.status == 1);
  CHECK(r.output.find("candidates:") != std::string::npos);
  CHECK(r.output.find("30005") != std::string::npos);
  CHECK(r.output.find("35000") != std::string::npos);

  r = run_shell(kCli + " parse '五'");  // --lang is required
  CHECK(r.status != 0);

  r = run_shell(kCli + " parse --lang zh --no-such-flag x");
  CHECK(r.status != 0);
}

TEST_CASE("genrefs renders the accepted target forms") {
  auto r = run_shell(kCli + " genrefs --direction zh-en '三千五百亿'");
  CHECK(r.status == 0);
  CHECK(r.output.find("350 billion\n") != std::string::npos);
  CHECK(r.output.find("350,000,000,000\n") != std::string::npos);

  r = run_shell(kCli + " genrefs --direction en-zh '2.82 billion'");
  CHECK(r.status == 0);
  CHECK(r.output.find("28.2亿\n") != std::string::npos);

  r = run_shell(kCli +
                " genrefs --direction zh-en --format json '三千五百亿'");
  CHECK(r.status == 0);
  CHECK(r.output.find("\"forms\"") != std::string::npos);
}

TEST_CASE("verify and postedit consume source-tab-target lines") {
  auto r = run_shell("printf '%s\\t%s\\n' '收入达到1000亿美元。' "
                     "'Revenue reached $10 billion.' | " +
                     kCli + " verify --direction zh-en");
  CHECK(r.status == 0);
  CHECK(r.output.find("mismatch\t1000亿\t10 billion") != std::string::npos);

  const std::string source =
      "某公司去年的年收入超过了1000亿美元，净利润达到5000万美元，"
      "总资产达到三千五百亿美元，其中包括134亿美元的现金储备。";
  const std::string hypothesis =
      "A company's revenue last year exceeded $10 billion, net profit "
      "reached $50 million, and total assets reached $35 billion, including "
      "$3.4 billion in cash reserves.";
  const std::string corrected =
      "A company's revenue last year exceeded $100 billion, net profit "
      "reached $50 million, and total assets reached $350 billion, including "
      "$13.4 billion in cash reserves.";
  std::string input = temp_path("numtrans_pe_input");
  write_file(input, source + "\t" + hypothesis + "\n");

  r = run_shell(kCli + " postedit --direction zh-en --style large_unit "
                       "--input " + input);
  CHECK(r.status == 0);
  CHECK(r.output == corrected + "\n");

  r = run_shell(kCli + " postedit --direction zh-en --style large_unit "
                       "--format json --input " + input);
  CHECK(r.status == 0);
  CHECK(r.output.find("\"edit_count\":3") != std::string::npos);
  std::remove(input.c_str());
}

TEST_CASE("llm-backed subcommands reach the configured endpoint") {
  httplib::Server server;
  server.Post("/v1/chat/completions", [](const httplib::Request& req,
                                         httplib::Response& res) {
    // extraction prompts get a pair list, translation prompts a sentence
    std::string content =
        req.body.find("excellent extractor") != std::string::npos
            ? "[(\"1000亿\", \"10 billion\")]"
            : "A fixed translation with no numbers.";
    nlohmann::json reply{
        {"choices",
         nlohmann::json::array({nlohmann::json{
             {"message", nlohmann::json{{"content", content}}}}})}};
    res.set_content(reply.dump(), "application/json");
  });
  int port = server.bind_to_any_port("127.0.0.1");
  REQUIRE(port > 0);
  std::thread thread([&] { server.listen_after_bind(); });
  server.wait_until_ready();
  std::string env =
      "NUMTRANS_ENDPOINT=http://127.0.0.1:" + std::to_string(port) + " ";

  auto r = run_shell("printf '%s\\t%s\\n' '收入达到1000亿美元。' "
                     "'Revenue reached $10 billion.' | " +
                     env + kCli +
                     " postedit --direction zh-en --style large_unit "
                     "--extractor llm");
  CHECK(r.status == 0);
  CHECK(r.output == "Revenue reached $100 billion.\n");

  r = run_shell(env + kCli + " evaluate --dataset " + kFixtures +
                "/table2.jsonl --strategy base");
  CHECK(r.status == 0);
  CHECK(r.output.find("pass rate: 0/20 (0.0%)") != std::string::npos);

  // without an endpoint the llm paths fail fast instead of hanging
  r = run_shell(kCli + " evaluate --dataset " + kFixtures +
                "/table2.jsonl --strategy base");
  CHECK(r.status == 1);
  CHECK(r.output.find("NUMTRANS_ENDPOINT") != std::string::npos);

  server.stop();
  thread.join();
}

TEST_CASE("evaluate prints the pass-rate table") {
  std::string cmd = kCli + " evaluate --dataset " + kFixtures +
                    "/table2.jsonl --hyp " + kFixtures + "/table2_hyps.jsonl";
  auto r = run_shell(cmd);
  CHECK(r.status == 0);
  CHECK(r.output.find("pass rate: 14/20 (70.0%)") != std::string::npos);
  CHECK(r.output.find("large_unit") != std::string::npos);
  CHECK(r.output.find("zh-en") != std::string::npos);

  r = run_shell(cmd + " --format json");
  CHECK(r.status == 0);
  CHECK(r.output.find("\"passed\":14") != std::string::npos);

  r = run_shell(kCli + " evaluate --dataset /nonexistent.jsonl --hyp " +
                kFixtures + "/table2_hyps.jsonl");
  CHECK(r.status == 1);
  CHECK(r.output.find("cannot open") != std::string::npos);

  r = run_shell(kCli + " evaluate --dataset " + kFixtures + "/table2.jsonl");
  CHECK(r.status == 1);
  CHECK(r.output.find("exactly one of") != std::string::npos);
}
