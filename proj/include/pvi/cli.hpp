#ifndef PVI_CLI_HPP
#define PVI_CLI_HPP

#include <json.hpp>

#include <string>
#include <vector>

namespace pvi
{

struct Diagnostic {
    std::string name;
    double value;
    double tolerance;
    bool pass;
};

struct CommandResult {
    std::string command;
    nlohmann::json inputs = nlohmann::json::object();  // option name -> token as given
    nlohmann::json outputs = nlohmann::json::object();
    std::vector<Diagnostic> diagnostics;
};

enum class OutputFormat { json, csv };

struct RunOutcome {
    CommandResult result;
    int exit_code = 0; // 0 ok, 2 domain or usage error, 3 failed diagnostic
    std::string out;   // the single output document
    std::string err;   // usage text and error messages
};

// argv excludes the program name
RunOutcome run(const std::vector<std::string> &argv);

// Sorted keys, numbers printed with %.<digits>g, integers verbatim.
std::string to_json(const CommandResult &r, int digits = 17);
std::string dump_json(const nlohmann::json &j, int digits = 17);
// "rows" of the payload as a table when present, otherwise key,value lines of the flattened document
std::string to_csv(const CommandResult &r, int digits = 17);

} // namespace pvi

#endif
