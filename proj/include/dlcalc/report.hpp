#pragma once

// Pass/fail bookkeeping shared by the verification suites.

#include <algorithm>
#include <string>
#include <vector>

namespace dlcalc {

struct Check
{
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Report
{
    std::string target;
    std::vector<Check> checks;
    // Observations that do not gate the verdict.
    std::vector<std::string> notes;

    void add(std::string name, bool pass, std::string detail = {})
    {
        checks.push_back(Check{std::move(name), pass, std::move(detail)});
    }
    void append(const Report& other)
    {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
        notes.insert(notes.end(), other.notes.begin(), other.notes.end());
    }
    bool pass() const
    {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
    }
    std::size_t passed() const
    {
        return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.pass; }));
    }
};

}  // namespace dlcalc
