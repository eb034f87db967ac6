// Exercises the installed binary end to end: exit codes, output formats,
// determinism. argv[1] is the path to the urep executable.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

int checks = 0, failures = 0;
std::string exe;

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string out_file = "/tmp/urep_cli_out.txt";
    std::string cmd = exe + " " + args + " > " + out_file + " 2>/dev/null";
    int raw = std::system(cmd.c_str());
    RunResult r;
    r.code = WEXITSTATUS(raw);
    std::ifstream f(out_file);
    std::stringstream ss;
    ss << f.rdbuf();
    r.out = ss.str();
    return r;
}

void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
        ++failures;
        std::cerr << "FAIL: " << what << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <path-to-urep>\n";
        return 2;
    }
    exe = argv[1];

    RunResult ring = run("verify ring");
    expect(ring.code == 0, "verify ring exits 0");
    expect(ring.out.find("\"failed\": 0") != std::string::npos, "ring report shows failed: 0");
    expect(ring.out.find("\"suite\": \"ring\"") != std::string::npos, "ring report names the suite");

    RunResult small = run("verify main-theorem --N 1");
    expect(small.code == 0, "verify main-theorem --N 1 exits 0");

    RunResult corrupted = run("verify main-theorem --N 1 --corrupt-rate");
    expect(corrupted.code == 1, "corrupted rate hook exits 1");
    expect(corrupted.out.find("\"status\": \"fail\"") != std::string::npos,
           "corrupted run reports a failing instance");

    RunResult bad_suite = run("verify no-such-suite");
    expect(bad_suite.code == 2, "unknown suite exits 2");

    RunResult bad_flag = run("verify ring --no-such-flag");
    expect(bad_flag.code == 2, "unknown flag exits 2");

    RunResult sim = run("simulate --N 1 --z 1/2 --z2 7/10 --w 1/2 --w2 7/10 --horizon 1 --seed 7");
    expect(sim.code == 0, "simulate exits 0");
    expect(sim.out.find("trajectory,time,nu_1") != std::string::npos, "simulate CSV header");
    RunResult sim2 = run("simulate --N 1 --z 1/2 --z2 7/10 --w 1/2 --w2 7/10 --horizon 1 --seed 7");
    expect(sim.out == sim2.out, "simulate is deterministic under a fixed seed");

    RunResult sim_int = run("simulate --N 1 --z 1 --z2 7/10 --w 1/2 --w2 7/10 --horizon 1");
    expect(sim_int.code == 2, "integer z without degenerate setup exits 2");

    RunResult sim_deg =
        run("simulate --N 2 --nu0 1,0 --z 2 --z2 5/2 --w 1 --w2 5/4 --horizon 1 --trajectories 20 --seed 3");
    expect(sim_deg.code == 0, "degenerate rectangle simulate exits 0");

    {
        std::ofstream cf("/tmp/urep_cli_config.json");
        cf << R"({"z":{"num":"1","den":"2"},"z_prime":{"num":"7","den":"10"},)"
           << R"("w":{"num":"1","den":"2"},"w_prime":{"num":"7","den":"10"},)"
           << R"("N":1,"nu0":[0],"horizon":0.5,"trajectories":3,"seed":9})";
    }
    RunResult cfgrun = run("simulate --config /tmp/urep_cli_config.json");
    expect(cfgrun.code == 0, "simulate --config exits 0");
    expect(cfgrun.out.find("seed=9") != std::string::npos, "config seed lands in the CSV header");

    RunResult outfile = run("verify ring --out /tmp/urep_cli_report.json");
    expect(outfile.code == 0, "verify --out exits 0");
    {
        std::ifstream f("/tmp/urep_cli_report.json");
        std::stringstream ss;
        ss << f.rdbuf();
        expect(ss.str().find("\"suite\": \"ring\"") != std::string::npos,
               "verify --out writes the JSON report");
    }

    RunResult hahn = run("eval hahn --n 1 --a 0 --b 0 --M 4");
    expect(hahn.code == 0 && hahn.out == "1 - 1/2y\n", "eval hahn prints the linear polynomial");

    RunResult lr = run("eval lr --lambda 1,1 --mu 1 --nu 1");
    expect(lr.code == 0 && lr.out == "1\n", "eval lr prints 1");

    RunResult jac = run("eval jacobi --n 1 --a 0 --b 0");
    expect(jac.code == 0 && jac.out == "1 - 2t\n", "eval jacobi prints 1 - 2t");

    RunResult link = run("eval link --N 2 --lambda 1,0");
    expect(link.code == 0, "eval link exits 0");
    expect(link.out.find("\"[0]\",1/2") != std::string::npos &&
               link.out.find("\"[1]\",1/2") != std::string::npos,
           "link row CSV lists both balanced entries");

    RunResult ph = run("eval phi-hat --beta-plus 1/3 --n 1 --window -2:2");
    expect(ph.code == 0 && ph.out == "1/3\n", "eval phi-hat prints the beta weight");

    RunResult sh = run("eval sigma-hat --beta-plus 1/3 --lambda 1,0 --window -4:4");
    expect(sh.code == 0 && sh.out == "2/9\n", "eval sigma-hat prints beta(1-beta)");

    std::printf("cli checks: %d, failures: %d\n", checks, failures);
    return failures == 0 ? 0 : 1;
}
