// escount: count isomorphism classes of element systems with characters
// over finite abelian groups.

#include "escount/cli.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <stdexcept>
#include <string>

namespace {

escount::Format format_from(const std::string& s) { return escount::parse_format(s); }

}  // namespace

int main(int argc, char** argv) {
    using namespace escount;
    CLI::App app{"Count element systems with characters over finite abelian groups"};
    app.require_subcommand(1);

    std::string format = "text";
    const auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    };

    cli::CountOptions count_opt;
    auto* count = app.add_subcommand("count", "Compute N(G,n)");
    count->add_option("--group", count_opt.group, "Group spec, e.g. C4xC2 or C2^3")->required();
    count->add_option("--n", count_opt.n, "Number of element/character pairs")->required();
    count->add_option("--method", count_opt.method, "closed|congruence|naive|all")
        ->check(CLI::IsMember({"closed", "congruence", "naive", "all"}));
    add_format(count);

    cli::VerifyOptions verify_opt;
    auto* verify = app.add_subcommand("verify", "Cross-check every method on all small groups");
    verify->add_option("--max-order", verify_opt.max_order, "Largest group order");
    verify->add_option("--max-n", verify_opt.max_n, "Largest n");
    add_format(verify);

    cli::TableOptions table_opt;
    std::uint64_t all_orders = 0;
    auto* table = app.add_subcommand("table", "N(G,n) for a list of groups");
    auto* groups_flag = table->add_option("--groups", table_opt.groups, "Comma-separated group specs")->delimiter(',');
    auto* orders_flag = table->add_option("--all-orders", all_orders, "All abelian groups of order <= N");
    table->add_option("--n", table_opt.n, "Number of element/character pairs")->required();
    add_format(table);
    groups_flag->excludes(orders_flag);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return cli::parse_error;
    }

    Budget budget;
    try {
        budget = Budget::from_environment();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::parse_error;
    }

    if (*count) {
        count_opt.format = format_from(format);
        return cli::cmd_count(count_opt, budget, std::cout, std::cerr);
    }
    if (*verify) {
        verify_opt.format = format_from(format);
        return cli::cmd_verify(verify_opt, budget, std::cout, std::cerr);
    }
    table_opt.format = format_from(format);
    if (orders_flag->count() > 0) table_opt.all_orders = all_orders;
    return cli::cmd_table(table_opt, budget, std::cout, std::cerr);
}
