#pragma once

// Runs the command-line tool and reads the golden and fixture case lists.
// A case line is "name|exit code|arguments"; "{fixtures}" in the arguments
// expands to the fixture directory. Blank lines and '#' lines are skipped.

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gradedk::testing {

struct CliResult {
    std::string out;
    int exit_code = -1;
};

struct CliCase {
    std::string name;
    int exit_code = 0;
    std::string args;
};

inline void PrintTo(const CliCase& c, std::ostream* os) { *os << c.name; }

inline CliResult run_cli(const std::string& args) {
    std::string cmd = std::string("\"") + GRADEDK_CLI + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed");
    CliResult r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

inline std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::vector<CliCase> read_cases(const std::string& path) {
    std::vector<CliCase> out;
    std::istringstream in(read_text(path));
    for (std::string line; std::getline(in, line);) {
        if (line.empty() || line[0] == '#') continue;
        auto a = line.find('|');
        auto b = line.find('|', a + 1);
        if (a == std::string::npos || b == std::string::npos) throw std::runtime_error("bad case line: " + line);
        CliCase c{line.substr(0, a), std::stoi(line.substr(a + 1, b - a - 1)), line.substr(b + 1)};
        for (std::size_t pos; (pos = c.args.find("{fixtures}")) != std::string::npos;)
            c.args.replace(pos, 10, GRADEDK_FIXTURE_DIR);
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace gradedk::testing
