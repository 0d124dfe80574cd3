#include "securepath/instance.hpp"
#include "securepath/pipeline.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace securepath;

namespace {

std::vector<std::vector<std::string>> parseCsv(const std::string& text)
{
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        std::vector<std::string> cells;
        std::istringstream fields(line);
        for (std::string cell; std::getline(fields, cell, ',');)
            cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

} // namespace

TEST(Pipeline, Hex10Row)
{
    const RunOutput run = runInstance(genHex(10));
    EXPECT_EQ(run.row.name, "hex_010");
    EXPECT_EQ(run.row.pointCount, 100u);
    EXPECT_EQ(run.row.bfsLength, 5);
    EXPECT_EQ(run.row.algLength, 5);
    EXPECT_EQ(run.row.insertedCount, run.wavefront.trace.insertedCount());
    ASSERT_TRUE(run.chain);
    EXPECT_TRUE(run.chain->valid);

    const std::string csv = formatTable({run.row}, TableFormat::Csv, false);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "name,points,bfs,alg,rounds,inserted");
    EXPECT_EQ(csv.find("hex_010,100,5,5,"), csv.find('\n') + 1);
}

TEST(Pipeline, VerifyCanBeSkipped)
{
    RunOptions options;
    options.verify = false;
    EXPECT_FALSE(runInstance(genRandom(100, 1), options).chain);
}

TEST(Table, EmptyRowsGiveHeaderOnly)
{
    EXPECT_EQ(formatTable({}, TableFormat::Csv, false), "name,points,bfs,alg,rounds,inserted\n");
    EXPECT_EQ(formatTable({}, TableFormat::Csv, true), "name,points,bfs,alg,rounds,inserted,build_ms,wavefront_ms\n");
    const std::string text = formatTable({}, TableFormat::Text, false);
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1);
}

TEST(Table, CsvIntegerFieldsRoundTrip)
{
    std::vector<ResultRow> rows;
    rows.push_back({"a", 100, 5, 5, 5, 123, Seconds(0.5), Seconds(0.25)});
    rows.push_back({"rand_02000_s1", 2000, 28, 21, 21, 9876, Seconds(1.0), Seconds(2.0)});
    const auto parsed = parseCsv(formatTable(rows, TableFormat::Csv, true));
    ASSERT_EQ(parsed.size(), 3u);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& cells = parsed[i + 1];
        ASSERT_EQ(cells.size(), 8u);
        EXPECT_EQ(cells[0], rows[i].name);
        EXPECT_EQ(std::stoul(cells[1]), rows[i].pointCount);
        EXPECT_EQ(std::stoi(cells[2]), rows[i].bfsLength);
        EXPECT_EQ(std::stoi(cells[3]), rows[i].algLength);
        EXPECT_EQ(std::stoi(cells[4]), rows[i].rounds);
        EXPECT_EQ(std::stoul(cells[5]), rows[i].insertedCount);
    }
}

TEST(Table, TextColumnsAligned)
{
    std::vector<ResultRow> rows;
    rows.push_back({"hex_010", 100, 5, 5, 5, 61, {}, {}});
    rows.push_back({"rand_02000_s1", 2000, 28, 21, 21, 9876, {}, {}});
    const std::string text = formatTable(rows, TableFormat::Text, false);
    std::istringstream in(text);
    std::string line;
    std::size_t width = 0;
    while (std::getline(in, line)) {
        if (width == 0)
            width = line.size();
        EXPECT_EQ(line.size(), width);
    }
    EXPECT_NE(text.find("\nhex_010           100    5    5       5        61\n"), std::string::npos) << text;
}
