// End-to-end checks of the command-line surface via the built binary.
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

using namespace std;
namespace fs = std::filesystem;

namespace {

fs::path data_dir() {
  const char* env = std::getenv("SEMHASH_DATA");
  return fs::path(env ? env : SEMHASH_DEFAULT_DATA_DIR);
}

std::string cli() {
  const char* env = std::getenv("SEMHASH_CLI");
  return env ? env : SEMHASH_DEFAULT_CLI;
}

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

RunResult run(const std::string& args) {
  fs::path out_file = fs::temp_directory_path() / "semhash_cli_out.txt";
  std::string cmd = "\"" + cli() + "\" " + args + " >\"" +
                    out_file.string() + "\" 2>/dev/null";
  int status = std::system(cmd.c_str());
  RunResult result;
  result.exit_code = WEXITSTATUS(status);
  std::ifstream in(out_file);
  std::stringstream ss;
  ss << in.rdbuf();
  result.output = ss.str();
  return result;
}

}  // namespace

TEST_CASE("featurize prints the worked example sub-tokens") {
  RunResult r = run("featurize \"I have a flying disk\"");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("#ha hav ave ve#") != std::string::npos);
  CHECK(r.output.find("-PRON- have a flying disk") != std::string::npos);

  RunResult empty = run("featurize \"\"");
  CHECK(empty.exit_code == 0);

  RunResult json = run("featurize --json \"have\"");
  CHECK(json.exit_code == 0);
  CHECK(json.output.find("\"subtokens\"") != std::string::npos);
  CHECK(json.output.find("\"#ha\"") != std::string::npos);
}

TEST_CASE("train then predict round-trips through a model file") {
  fs::path model = fs::temp_directory_path() / "semhash_cli_model.shm";
  fs::path thesaurus = data_dir() / "thesaurus.tsv";
  RunResult tr = run("train --corpus \"" + (data_dir() / "chatbot.json").string() +
                     "\" --classifier passive_aggressive --seed 0 " +
                     "--thesaurus \"" + thesaurus.string() + "\" --out \"" +
                     model.string() + "\"");
  CHECK(tr.exit_code == 0);
  CHECK(fs::exists(model));

  fs::path queries = fs::temp_directory_path() / "semhash_cli_queries.txt";
  std::ofstream(queries) << "when does the next u-bahn leave from garching?\n"
                         << "i need a conection from here to marienplatz\n"
                         << "wann fährt die nächste u-bahn\n";
  RunResult pr = run("predict --model \"" + model.string() +
                     "\" --input \"" + queries.string() + "\"");
  CHECK(pr.exit_code == 0);
  std::istringstream lines(pr.output);
  std::string label;
  int count = 0;
  while (std::getline(lines, label)) {
    CHECK((label == "Departure Time" || label == "Find Connection"));
    ++count;
  }
  CHECK(count == 3);

  RunResult scored = run("predict --model \"" + model.string() +
                         "\" --scores --input \"" + queries.string() + "\"");
  CHECK(scored.exit_code == 0);
  CHECK(scored.output.find("Departure Time=") != std::string::npos);
  CHECK(scored.output.find("Find Connection=") != std::string::npos);

  // empty input stream: no output, exit 0
  fs::path empty_file = fs::temp_directory_path() / "semhash_cli_empty.txt";
  std::ofstream(empty_file) << "";
  RunResult empty = run("predict --model \"" + model.string() +
                        "\" --input \"" + empty_file.string() + "\"");
  CHECK(empty.exit_code == 0);
  CHECK(empty.output.empty());
}

TEST_CASE("usage errors exit with code 1") {
  RunResult unknown = run("bench --corpus-dir \"" + data_dir().string() +
                          "\" --datasets chatbot --classifiers perceptron");
  CHECK(unknown.exit_code == 1);

  RunResult missing = run("bench --corpus-dir /nonexistent --datasets chatbot");
  CHECK(missing.exit_code == 1);

  RunResult bad_model = run("predict --model /nonexistent.shm");
  CHECK(bad_model.exit_code == 1);

  RunResult bad_flag = run("bench --no-such-flag");
  CHECK(bad_flag.exit_code == 1);

  RunResult no_sub = run("");
  CHECK(no_sub.exit_code == 1);
}

TEST_CASE("bench exit codes for --check") {
  fs::path report = fs::temp_directory_path() / "semhash_cli_report";
  RunResult ok = run("bench --corpus-dir \"" + data_dir().string() +
                     "\" --datasets chatbot --classifiers ridge,linear_svc " +
                     "--runs 2 --seed 0 --check --report \"" +
                     report.string() + "\"");
  CHECK(ok.exit_code == 0);
  CHECK(fs::exists(report.string() + ".txt"));
  CHECK(fs::exists(report.string() + ".json"));

  // knn alone stays under the 0.98 bar on chatbot, so --check must exit 2
  RunResult fail = run("bench --corpus-dir \"" + data_dir().string() +
                       "\" --datasets chatbot --classifiers knn --runs 2 " +
                       "--seed 0 --check --report \"" + report.string() +
                       "\"");
  CHECK(fail.exit_code == 2);
}

TEST_CASE("SEMHASH_THESAURUS env variable supplies the default lexicon") {
  fs::path model = fs::temp_directory_path() / "semhash_cli_envth.shm";
  fs::path out_file = fs::temp_directory_path() / "semhash_cli_envout.txt";
  std::string cmd = "SEMHASH_THESAURUS=\"" +
                    (data_dir() / "thesaurus.tsv").string() + "\" \"" +
                    cli() + "\" train --corpus \"" +
                    (data_dir() / "chatbot.json").string() +
                    "\" --classifier ridge --seed 1 --out \"" +
                    model.string() + "\" >\"" + out_file.string() +
                    "\" 2>&1";
  int status = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(status) == 0);
  std::ifstream in(model);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str().find("thesaurus.tsv") != std::string::npos);
}

TEST_CASE("train honors --no-augment in provenance") {
  fs::path model = fs::temp_directory_path() / "semhash_cli_noaug.shm";
  RunResult tr =
      run("train --corpus \"" + (data_dir() / "webapplication.json").string() +
          "\" --classifier ridge --no-augment --seed 3 --out \"" +
          model.string() + "\"");
  CHECK(tr.exit_code == 0);
  std::ifstream in(model);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str().find("\"augmented\": false") != std::string::npos);
}
