#pragma once

#include <string>
#include <vector>

namespace lie::verify {

/// Outcome of one named verification check. Warnings carry documented
/// published-table errata; failures are genuine mismatches.
struct CheckResult {
    std::string id;
    std::string title;
    bool passed = true;
    std::vector<std::string> failures;
    std::vector<std::string> warnings;
};

CheckResult check_table1_sl6();
CheckResult check_table2_rigid();
CheckResult check_table3_so7();
CheckResult check_table4_sp6();
CheckResult check_table5_so12();
CheckResult check_exc_tables();
CheckResult check_exc_strata();
CheckResult check_collapse_oracle(int max_n);
CheckResult check_induction_oracle();
CheckResult check_prop_centre(int max_n);  // faithful; reports the true violations
CheckResult check_round_trip(int max_n);
CheckResult check_codim3();
CheckResult check_non_empty();
CheckResult check_dim_invariants();

std::vector<CheckResult> tables_suite();
std::vector<CheckResult> oracles_suite();
std::vector<CheckResult> properties_suite();

/// suite is one of "tables", "oracles", "properties", "all".
std::vector<CheckResult> run_suite(const std::string& suite);

}  // namespace lie::verify
