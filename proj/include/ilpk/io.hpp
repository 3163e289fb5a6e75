#pragma once

#include <ilpk/instance.hpp>
#include <ilpk/oracle.hpp>
#include <ilpk/problems.hpp>
#include <ilpk/report.hpp>
#include <ilpk/table.hpp>

#include <string>
#include <string_view>
#include <variant>

namespace ilpk
{
    using AnyInstance = std::variant<IlpInstance, CoverPackInstance>;

    // JSON instance files. Parsing sorts the sparse coefficients of every constraint and then
    // validates; serializing writes keys in a fixed order with one constraint per line, so
    // parse and serialize are inverse on canonical text.

    [[nodiscard]] auto parse_instance(std::string_view text) -> AnyInstance;
    [[nodiscard]] auto parse_general(std::string_view text) -> IlpInstance;
    [[nodiscard]] auto parse_cover_pack(std::string_view text) -> CoverPackInstance;
    [[nodiscard]] auto serialize_instance(const IlpInstance & inst) -> std::string;
    [[nodiscard]] auto serialize_instance(const CoverPackInstance & inst) -> std::string;
    [[nodiscard]] auto serialize_instance(const AnyInstance & inst) -> std::string;

    [[nodiscard]] auto parse_graph(std::string_view text) -> GraphInstance;
    [[nodiscard]] auto serialize_graph(const GraphInstance & g) -> std::string;
    [[nodiscard]] auto parse_subset_sum(std::string_view text) -> SubsetSumInstance;
    [[nodiscard]] auto serialize_subset_sum(const SubsetSumInstance & s) -> std::string;
    [[nodiscard]] auto parse_hitting_set(std::string_view text) -> HittingSetInstance;
    [[nodiscard]] auto serialize_hitting_set(const HittingSetInstance & h) -> std::string;

    /// Box sidecar: a JSON array whose entry v is [lo, hi] for variable v.
    [[nodiscard]] auto parse_box(std::string_view text) -> Box;
    [[nodiscard]] auto serialize_box(const Box & box) -> std::string;

    /// Merge map sidecar: {"survivor_of": [...]} in original variable order, values are
    /// indices into the merged instance.
    [[nodiscard]] auto parse_merge_map(std::string_view text) -> std::vector<VarIndex>;
    [[nodiscard]] auto serialize_merge_map(const std::vector<VarIndex> & survivor_of) -> std::string;

    /// Line-based "tbl-v1" text. Bits are packed LSB-first into bytes written as hex pairs.
    [[nodiscard]] auto parse_table_instance(std::string_view text) -> TableInstance;
    [[nodiscard]] auto serialize_table_instance(const TableInstance & inst) -> std::string;

    /// "rep-v1" JSON report.
    [[nodiscard]] auto serialize_report(const ReductionReport & report) -> std::string;
    [[nodiscard]] auto serialize_verdict(const OracleVerdict & verdict, std::string_view method) -> std::string;
    [[nodiscard]] auto serialize_stats(const SparsenessStats & stats) -> std::string;

    [[nodiscard]] auto read_file(const std::string & path) -> std::string;
    auto write_file(const std::string & path, std::string_view content) -> void;
}
