// Exercises the installed command-line surface end to end: exit codes,
// output files, config round-trips, deterministic reruns.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

int failures = 0;

void check(bool ok, const std::string& what) {
    std::printf("[%s] %s\n", ok ? "PASS" : "FAIL", what.c_str());
    if (!ok) ++failures;
}

int run(const std::string& args, const fs::path& log) {
    const std::string cmd = std::string(QLNLS_CLI_PATH) + " " + args + " >" + log.string() +
                            " 2>" + log.string() + ".err";
    const int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
    std::ifstream is(p, std::ios::binary);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

} // namespace

int main() {
    const fs::path work = fs::temp_directory_path() / "qlnls_cli_driver";
    fs::remove_all(work);
    fs::create_directories(work);
    const fs::path log = work / "log.txt";

    // --- groundstate: b sweep emits monotonically wider profiles
    {
        const int rc = run("groundstate --a 9 --b 4.0 --b 4.2 --b 4.4 --b 4.49 --b 4.499 "
                           "--alpha 1 --n 1024 --scale 5 --out " + (work / "gs").string(), log);
        check(rc == 0, "groundstate sweep exits 0");
        double prev_width = 0.0, prev_max = 0.0;
        bool widths_increase = true, maxima_increase = true;
        int profiles = 0;
        for (const char* b : {"4", "4.2", "4.4", "4.49", "4.499"}) {
            const fs::path csv = work / "gs" / (std::string("groundstate_b") + b + ".csv");
            if (!fs::exists(csv)) {
                check(false, std::string("profile exists: ") + csv.string());
                continue;
            }
            ++profiles;
            std::ifstream is(csv);
            std::string line;
            std::getline(is, line); // header
            std::vector<double> phis;
            while (std::getline(is, line)) {
                const auto comma = line.find(',');
                phis.push_back(std::stod(line.substr(comma + 1)));
            }
            check(phis.size() == 1024, "1024 rows in " + csv.filename().string());
            const double maxv = *std::max_element(phis.begin(), phis.end());
            int above_half = 0;
            for (double p : phis)
                if (p > 0.5 * maxv) ++above_half;
            if (above_half <= prev_width) widths_increase = false;
            if (maxv <= prev_max) maxima_increase = false;
            prev_width = above_half;
            prev_max = maxv;
        }
        check(profiles == 5, "all five profiles emitted");
        check(widths_increase, "half-max width increases with b");
        check(maxima_increase, "peak value increases with b");
        // the b = 4.499 profile peaks near 0.9999
        const std::string txt = slurp(log);
        check(txt.find("0.9998") != std::string::npos || txt.find("0.9999") != std::string::npos,
              "b=4.499 peak reported near 0.9999");
    }

    // --- validation exit code: nonexistence regime
    {
        const fs::path cfg = work / "bad.ini";
        std::ofstream os(cfg);
        os << "[model]\na = 2\nb = 1.5\nalpha = 1\n[initial]\nkind = ground_state_scaled\n";
        os.close();
        const int rc = run("evolve --config " + cfg.string() + " --out " + (work / "bad").string(),
                           log);
        check(rc == 1, "nonexistence regime config exits 1");
        const std::string err = slurp(fs::path(log.string() + ".err"));
        check(err.find("a <= (alpha+1)b") != std::string::npos, "error names the regime");
    }

    // --- parse error exit code
    {
        const fs::path cfg = work / "parse.ini";
        std::ofstream os(cfg);
        os << "[grid]\nbogus = 1\n";
        os.close();
        const int rc = run("evolve --config " + cfg.string() + " --out " + (work / "p").string(),
                           log);
        check(rc == 1, "config parse error exits 1");
    }

    // --- unknown preset
    check(run("preset does-not-exist --out " + (work / "x").string(), log) == 1,
          "unknown preset exits 1");

    // --- preset --list contains the quick tier
    {
        const int rc = run("preset --list", log);
        const std::string txt = slurp(log);
        check(rc == 0 && txt.find("gs-exact-a9-b4.4") != std::string::npos &&
                  txt.find("gaussian-0.9-alpha3") != std::string::npos,
              "preset --list names the experiments");
    }

    // --- a preset's dumped config reruns to a byte-identical diagnostics CSV
    {
        // a small custom config keeps this quick; determinism is what matters
        const fs::path cfg = work / "small.ini";
        std::ofstream os(cfg);
        os << "[model]\na = 9\nb = 4.4\nalpha = 1\n"
           << "[grid]\nn = 512\nscale = 5\n"
           << "[initial]\nkind = ground_state_scaled\nlambda = 0.99\n"
           << "[evolution]\nt_end = 0.002\nn_steps = 2000\nrecord_every = 200\n"
           << "[fit]\nenabled = true\nwindow = 5\n";
        os.close();
        const int rc1 = run("evolve --config " + cfg.string() + " --out " + (work / "r1").string(),
                            log);
        const int rc2 = run("evolve --config " + cfg.string() + " --out " + (work / "r2").string(),
                            log);
        check(rc1 == 0 && rc2 == 0, "config runs exit 0");
        check(slurp(work / "r1" / "diagnostics.csv") == slurp(work / "r2" / "diagnostics.csv"),
              "reruns produce byte-identical diagnostics");
        check(fs::exists(work / "r1" / "manifest.json") && fs::exists(work / "r1" / "fit.json") &&
                  fs::exists(work / "r1" / "initial.csv") && fs::exists(work / "r1" / "final.csv"),
              "run writes snapshots, fit report, manifest");
    }

    // --- stability heuristic warning goes to stderr, run proceeds
    {
        const fs::path cfg = work / "warn.ini";
        std::ofstream os(cfg);
        os << "[model]\na = 9\nb = 4.4\nalpha = 1\n"
           << "[grid]\nn = 512\nscale = 5\n"
           << "[initial]\nkind = ground_state_scaled\nlambda = 1\n"
           << "[evolution]\nt_end = 0.001\nn_steps = 5\nrecord_every = 5\n"
           << "[fit]\nenabled = false\n";
        os.close();
        const int rc = run("evolve --config " + cfg.string() + " --out " + (work / "w").string(),
                           log);
        const std::string err = slurp(fs::path(log.string() + ".err"));
        check(rc == 0, "heuristic violation still exits 0");
        check(err.find("stability heuristic") != std::string::npos, "warning printed to stderr");
    }

    // --- fit subcommand consumes a snapshot written by a run
    {
        const int rc = run("fit --in " + (work / "r1" / "final.csv").string() +
                               " --a 9 --alpha 1 --b-ref 4.4 --window 5 --out " +
                               (work / "fitout").string(),
                           log);
        check(rc == 0 && fs::exists(work / "fitout" / "fit.json"), "fit subcommand writes fit.json");
    }

    // --- phaseplane report
    {
        const int rc = run("phaseplane --a 9 --b 4.4 --alpha 1 --span 6 --steps 20000 "
                           "--domain 12 --points 1024 --out " + (work / "pp").string(), log);
        check(rc == 0 && fs::exists(work / "pp" / "critical_points.csv") &&
                  fs::exists(work / "pp" / "orbit.csv") && fs::exists(work / "pp" / "phaseplane.json"),
              "phaseplane writes critical points, orbit, report");
    }

    // --- sweep over two tiny... (use configs? sweep takes presets only; skip heavy ones)
    // The sweep path is covered by run_sweep unit usage; here just check the help works.
    check(run("--help", log) == 0, "--help exits 0");

    std::printf("%d failure(s)\n", failures);
    return failures == 0 ? 0 : 1;
}
