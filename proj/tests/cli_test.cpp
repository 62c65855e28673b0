/*
 * Copyright 2026 The linord Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Golden tests for the CLI: every invocation must be byte-identical to its
// checked-in transcript (and across repeated runs with the same seed).
// Set LINORD_UPDATE_GOLDEN=1 to regenerate after an intentional change.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string cli_path() {
  const char* p = std::getenv("LINORD_CLI");
  REQUIRE_MESSAGE(p != nullptr, "LINORD_CLI must point at the built binary");
  return p;
}

std::string golden_dir() {
  const char* p = std::getenv("LINORD_GOLDEN_DIR");
  REQUIRE_MESSAGE(p != nullptr, "LINORD_GOLDEN_DIR must point at tests/golden");
  return p;
}

struct RunResult {
  int exit_code;
  std::string stdout_text;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = cli_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return RunResult{code, out};
}

void check_golden(const std::string& name, const std::string& args,
                  int expect_exit = 0) {
  RunResult r = run_cli(args);
  CAPTURE(args);
  CHECK(r.exit_code == expect_exit);

  std::string path = golden_dir() + "/" + name;
  if (std::getenv("LINORD_UPDATE_GOLDEN")) {
    std::ofstream out(path, std::ios::binary);
    out << r.stdout_text;
    return;
  }
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), ("missing golden file " + path).c_str());
  std::ostringstream want;
  want << in.rdbuf();
  CHECK(r.stdout_text == want.str());

  // Stability: identical argv and seed give byte-identical output.
  RunResult again = run_cli(args);
  CHECK(again.stdout_text == r.stdout_text);
}

}  // namespace

TEST_CASE("classify golden") {
  check_golden("classify_r2.json", "classify \"R*2\" --json");
  check_golden("classify_q2.json", "classify \"Q*2\" --json");
  check_golden("classify_r2.txt", "classify \"R*2\"");
}

TEST_CASE("enumerate and jumps golden") {
  check_golden("enumerate_q2.json", "enumerate \"Q*2\" --count 8 --json");
  check_golden("enumerate_fin3.txt", "enumerate \"fin(3)\"");
  check_golden("jumps_w.json", "jumps w --count 2 --json");
  check_golden("jumps_finsum.txt", "\"jumps\" \"fin(3)+fin(2)\"");
}

TEST_CASE("embed golden") {
  check_golden("embed_z_r.json",
               "embed Z --target r --element 3 --precision 10 --json");
  check_golden("embed_z_q.json", "embed Z --target q --element 3 --json");
  check_golden("embed_finq_r2.json",
               "embed \"fin(2)+Q\" --target r2 --element 0:1 --precision 8 "
               "--dense omit:0:1 --json");
  check_golden("embed_finq_r2.txt",
               "embed \"fin(2)+Q\" --target r2 --element 0:1 --precision 8 "
               "--dense omit:0:1");
}

TEST_CASE("homog-extend golden") {
  check_golden("homog_extend.json",
               "homog-extend --pairs \"0.0 -> 5.0; 1.1 -> 7.1\" "
               "--probe 1/2.0,-10.0,1.1 --json");
  check_golden("homog_violation.json",
               "homog-extend --pairs \"0.0 -> 5.1\" --json", 1);
}

TEST_CASE("demo-collision golden") {
  check_golden("demo_collision.json", "demo-collision --json");
  check_golden("demo_collision.txt", "demo-collision");
}

TEST_CASE("verify golden") {
  check_golden("verify_q2.json",
               "verify \"Q*2\" --suite dense --seed 7 --json");
}

TEST_CASE("error JSON and exit codes") {
  check_golden("error_symbolic.json",
               "enumerate R --count 3 --json", 1);
  check_golden("error_parse.json", "classify \"Q+\" --json", 1);

  // Usage errors exit 2.
  RunResult usage = run_cli("embed Z --element 3");
  CHECK(usage.exit_code == 2);
  RunResult nocount = run_cli("enumerate Q");
  CHECK(nocount.exit_code == 2);
  RunResult helpish = run_cli("--help");
  CHECK(helpish.exit_code == 0);
}
