/*
 * SPDX-License-Identifier: GPL-2.0-only
 */

#include "axtcp/phy-tables.h"

#include "axtcp/error.h"
#include "axtcp/text-util.h"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace axtcp
{

namespace
{

// Columns: UL rate, DL rate, DL preamble, legacy rate. UL preamble is 64.8 us
// and the legacy preamble 20 us throughout.
struct RawRow
{
    double ulRate;
    double dlRate;
    double dlPreamble;
    double legacyRate;
};

using RawBlock = std::array<RawRow, kMcsCount>;

constexpr RawBlock kStations4{{
    {68.1, 72.1, 72.8, 48.0},
    {136.1, 144.1, 72.8, 48.0},
    {204.2, 216.2, 68.8, 48.0},
    {272.2, 288.2, 68.8, 48.0},
    {408.3, 432.4, 68.8, 48.0},
    {544.4, 576.5, 68.8, 48.0},
    {612.5, 648.5, 68.8, 48.0},
    {680.6, 720.6, 68.8, 48.0},
    {816.7, 864.7, 68.8, 48.0},
    {907.4, 960.7, 68.8, 48.0},
    {1020.8, 1080.4, 68.8, 48.0},
    {1134.2, 1201.0, 68.8, 48.0},
}};

constexpr RawBlock kStations8{{
    {34.0, 36.0, 76.8, 36.0},
    {68.1, 72.1, 76.8, 48.0},
    {102.1, 108.1, 72.8, 48.0},
    {136.1, 144.1, 72.8, 48.0},
    {204.2, 216.2, 68.8, 48.0},
    {272.2, 288.2, 68.8, 48.0},
    {306.3, 324.3, 68.8, 48.0},
    {340.3, 360.3, 68.8, 48.0},
    {408.3, 432.4, 68.8, 48.0},
    {453.7, 480.4, 68.8, 48.0},
    {510.4, 540.4, 68.8, 48.0},
    {567.1, 600.4, 68.8, 48.0},
}};

constexpr RawBlock kStations16{{
    {16.3, 17.2, 84.8, 12.0},
    {32.5, 34.4, 84.8, 12.0},
    {48.8, 51.6, 76.8, 24.0},
    {65.0, 68.8, 76.8, 48.0},
    {97.5, 103.2, 72.8, 48.0},
    {130.0, 137.6, 72.8, 48.0},
    {146.3, 154.9, 72.8, 48.0},
    {162.5, 172.1, 72.8, 48.0},
    {195.0, 206.5, 72.8, 48.0},
    {216.7, 229.4, 72.8, 48.0},
    {243.8, 258.1, 72.8, 48.0},
    {270.8, 286.8, 72.8, 48.0},
}};

constexpr RawBlock kStations32{{
    {8.1, 8.6, 104.8, 6.0},
    {16.3, 17.2, 104.8, 12.0},
    {24.4, 25.8, 84.8, 24.0},
    {32.5, 34.4, 84.8, 24.0},
    {48.8, 51.6, 80.8, 48.0},
    {65.0, 68.8, 80.8, 48.0},
    {73.1, 77.4, 80.8, 48.0},
    {81.3, 86.0, 80.8, 48.0},
    {97.5, 103.2, 80.8, 48.0},
    {108.3, 114.7, 80.8, 48.0},
    {121.9, 129.0, 80.8, 48.0},
    {135.4, 143.4, 80.8, 48.0},
}};

constexpr double kUlPreamble = 64.8;
constexpr double kLegacyPreamble = 20.0;

const std::vector<BerTable::Row>&
Ber160Rows()
{
    static const std::vector<BerTable::Row> rows = {
        {10.2, {0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}},
        {13.6, {0, 0, 0.4188, 1, 1, 1, 1, 1, 1, 1, 1, 1}},
        {14.6, {0, 0, 0.0003, 1, 1, 1, 1, 1, 1, 1, 1, 1}},
        {16.4, {0, 0, 0, 0.4973, 1, 1, 1, 1, 1, 1, 1, 1}},
        {17.5, {0, 0, 0, 0.0005, 1, 1, 1, 1, 1, 1, 1, 1}},
        {19.7, {0, 0, 0, 0, 0.5970, 1, 1, 1, 1, 1, 1, 1}},
        {20.1, {0, 0, 0, 0, 0.1417, 1, 1, 1, 1, 1, 1, 1}},
        {24.7, {0, 0, 0, 0, 0, 0.0010, 0.832, 1, 1, 1, 1, 1}},
        {25.9, {0, 0, 0, 0, 0, 0, 0.0022, 1, 1, 1, 1, 1}},
        {27.1, {0, 0, 0, 0, 0, 0, 0, 0.0749, 1, 1, 1, 1}},
        {30.2, {0, 0, 0, 0, 0, 0, 0, 0, 0.6457, 1, 1, 1}},
        {31.7, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0.9412, 1, 1}},
        {32.5, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0.0987, 1, 1}},
        {33.5, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0.0005, 0.4958, 1}},
        {33.6, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0.3696, 1}},
        {34.0, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0.0222, 1}},
        {35.1, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0.6595}},
        {36.6, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    };
    return rows;
}

PhyTable
FromRaw(std::uint32_t stations, const RawBlock& raw)
{
    std::array<McsEntry, kMcsCount> entries{};
    for (int m = 0; m < kMcsCount; ++m)
    {
        const auto& r = raw[m];
        entries[m] = McsEntry{m,
                              r.ulRate,
                              kUlPreamble,
                              r.dlRate,
                              r.dlPreamble,
                              r.legacyRate,
                              kLegacyPreamble};
    }
    return PhyTable(stations, entries);
}

void
CheckMcs(int mcs)
{
    if (mcs < 0 || mcs >= kMcsCount)
    {
        throw Error(ErrorCode::Domain, "MCS index " + std::to_string(mcs) + " outside 0..11");
    }
}

std::string
ReadContentLine(std::istream& in, std::string& line, std::vector<std::string>& comments)
{
    while (std::getline(in, line))
    {
        auto t = Trim(line);
        if (t.empty())
        {
            continue;
        }
        if (t.front() == '#')
        {
            comments.emplace_back(Trim(t.substr(1)));
            continue;
        }
        return std::string(t);
    }
    return {};
}

std::ifstream
OpenOrThrow(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
    {
        throw Error(ErrorCode::Io, "cannot open " + path.string());
    }
    return in;
}

} // namespace

MHz_u
BandwidthForStations(std::uint32_t stations)
{
    switch (stations)
    {
    case 4:
        return 160;
    case 8:
        return 80;
    case 16:
        return 40;
    case 32:
        return 20;
    default:
        throw Error(ErrorCode::Domain,
                    "station count " + std::to_string(stations) + " not in {4,8,16,32}");
    }
}

PhyTable::PhyTable(std::uint32_t stations, const std::array<McsEntry, kMcsCount>& entries)
    : m_stations(stations),
      m_entries(entries)
{
    BandwidthForStations(stations);
    for (int m = 0; m < kMcsCount; ++m)
    {
        const auto& e = entries[m];
        if (e.mcs != m)
        {
            throw Error(ErrorCode::Validation, "PHY table entries must cover MCS 0..11 in order");
        }
        if (!(e.ulRate > 0 && e.dlRate > 0 && e.legacyRate > 0))
        {
            throw Error(ErrorCode::Validation,
                        "PHY table MCS " + std::to_string(m) + ": rates must be positive");
        }
        if (e.ulPreamble < 0 || e.dlPreamble < 0 || e.legacyPreamble < 0)
        {
            throw Error(ErrorCode::Validation,
                        "PHY table MCS " + std::to_string(m) + ": negative preamble");
        }
    }
}

const McsEntry&
LookupMcs(const PhyTable& table, int mcs)
{
    CheckMcs(mcs);
    return table.GetEntries()[mcs];
}

BerTable::BerTable(MHz_u bandwidth, std::vector<Row> rows)
    : m_bandwidth(bandwidth),
      m_rows(std::move(rows))
{
    if (m_rows.empty())
    {
        throw Error(ErrorCode::Validation, "BER table has no rows");
    }
    for (std::size_t i = 0; i < m_rows.size(); ++i)
    {
        const auto& row = m_rows[i];
        for (int m = 0; m < kMcsCount; ++m)
        {
            if (!(row.ber[m] >= 0.0 && row.ber[m] <= 1.0))
            {
                throw Error(ErrorCode::Validation,
                            "BER outside [0,1] at SNR " + FormatDouble(row.snrDb));
            }
            if (m > 0 && row.ber[m] < row.ber[m - 1])
            {
                throw Error(ErrorCode::Validation,
                            "BER decreases with MCS at SNR " + FormatDouble(row.snrDb));
            }
        }
        if (i > 0)
        {
            const auto& prev = m_rows[i - 1];
            if (row.snrDb == prev.snrDb)
            {
                throw Error(ErrorCode::Validation,
                            "duplicate SNR row " + FormatDouble(row.snrDb));
            }
            if (row.snrDb < prev.snrDb)
            {
                throw Error(ErrorCode::Validation, "BER rows not sorted by ascending SNR");
            }
            for (int m = 0; m < kMcsCount; ++m)
            {
                if (row.ber[m] > prev.ber[m])
                {
                    throw Error(ErrorCode::Validation,
                                "BER of MCS " + std::to_string(m) + " increases with SNR at " +
                                    FormatDouble(row.snrDb));
                }
            }
        }
    }
}

const BerTable::Row&
BerTable::RowAt(double snrDb) const
{
    auto it = std::upper_bound(m_rows.begin(),
                               m_rows.end(),
                               snrDb,
                               [](double snr, const Row& row) { return snr < row.snrDb; });
    if (it == m_rows.begin())
    {
        throw Error(ErrorCode::ChannelUnusable,
                    "SNR " + FormatDouble(snrDb) + " dB below the lowest table row (" +
                        FormatDouble(m_rows.front().snrDb) + " dB) for " +
                        FormatDouble(m_bandwidth) + " MHz");
    }
    return *std::prev(it);
}

double
LookupBer(const BerTable& table, double snrDb, int mcs)
{
    CheckMcs(mcs);
    return table.RowAt(snrDb).ber[mcs];
}

PhyTable
EmbeddedPhyTable(std::uint32_t stations)
{
    switch (stations)
    {
    case 4:
        return FromRaw(4, kStations4);
    case 8:
        return FromRaw(8, kStations8);
    case 16:
        return FromRaw(16, kStations16);
    case 32:
        return FromRaw(32, kStations32);
    default:
        throw Error(ErrorCode::Domain,
                    "station count " + std::to_string(stations) + " not in {4,8,16,32}");
    }
}

BerTable
EmbeddedBerTable160()
{
    return BerTable(160, Ber160Rows());
}

PhyTable
ParsePhyTable(std::istream& in, std::uint32_t stations)
{
    static const std::vector<std::string> kHeader = {"mcs",
                                                     "ul_rate",
                                                     "ul_preamble",
                                                     "dl_rate",
                                                     "dl_preamble",
                                                     "legacy_rate",
                                                     "legacy_preamble"};
    std::string line;
    std::vector<std::string> comments;
    auto header = ReadContentLine(in, line, comments);
    if (SplitFields(header) != kHeader)
    {
        throw Error(ErrorCode::Schema,
                    "PHY table header must be "
                    "mcs,ul_rate,ul_preamble,dl_rate,dl_preamble,legacy_rate,legacy_preamble");
    }
    std::array<McsEntry, kMcsCount> entries{};
    int count = 0;
    for (auto row = ReadContentLine(in, line, comments); !row.empty();
         row = ReadContentLine(in, line, comments))
    {
        auto f = SplitFields(row);
        if (f.size() != kHeader.size())
        {
            throw Error(ErrorCode::Schema,
                        "PHY table row has " + std::to_string(f.size()) + " fields, expected 7");
        }
        if (count >= kMcsCount)
        {
            throw Error(ErrorCode::Schema, "PHY table has more than 12 rows");
        }
        auto mcs = ParseUnsigned(f[0]);
        if (mcs != static_cast<std::uint64_t>(count))
        {
            throw Error(ErrorCode::Schema, "PHY table rows must be MCS 0..11 in order");
        }
        entries[count] = McsEntry{count,
                                  ParseDouble(f[1]),
                                  ParseDouble(f[2]),
                                  ParseDouble(f[3]),
                                  ParseDouble(f[4]),
                                  ParseDouble(f[5]),
                                  ParseDouble(f[6])};
        ++count;
    }
    if (count != kMcsCount)
    {
        throw Error(ErrorCode::Schema,
                    "PHY table has " + std::to_string(count) + " rows, expected 12");
    }
    return PhyTable(stations, entries);
}

BerTable
ParseBerTable(std::istream& in, std::optional<MHz_u> bandwidth)
{
    std::vector<std::string> kHeader = {"snr_db"};
    for (int m = 0; m < kMcsCount; ++m)
    {
        kHeader.push_back("mcs" + std::to_string(m));
    }
    std::string line;
    std::vector<std::string> comments;
    auto header = ReadContentLine(in, line, comments);
    if (SplitFields(header) != kHeader)
    {
        throw Error(ErrorCode::Schema, "BER table header must be snr_db,mcs0,...,mcs11");
    }
    std::vector<BerTable::Row> rows;
    for (auto row = ReadContentLine(in, line, comments); !row.empty();
         row = ReadContentLine(in, line, comments))
    {
        auto f = SplitFields(row);
        if (f.size() != kHeader.size())
        {
            throw Error(ErrorCode::Schema,
                        "BER table row has " + std::to_string(f.size()) + " fields, expected 13");
        }
        BerTable::Row r{ParseDouble(f[0]), {}};
        for (int m = 0; m < kMcsCount; ++m)
        {
            r.ber[m] = ParseDouble(f[m + 1]);
        }
        rows.push_back(r);
    }

    std::optional<MHz_u> declared;
    for (const auto& c : comments)
    {
        constexpr std::string_view key = "bandwidth_mhz=";
        if (c.starts_with(key))
        {
            declared = ParseDouble(std::string_view(c).substr(key.size()));
        }
    }
    if (declared && bandwidth && *declared != *bandwidth)
    {
        throw Error(ErrorCode::Validation,
                    "BER table declares " + FormatDouble(*declared) + " MHz but " +
                        FormatDouble(*bandwidth) + " MHz is required");
    }
    auto bw = declared ? *declared : bandwidth.value_or(160);
    return BerTable(bw, std::move(rows));
}

std::string
SerializePhyTable(const PhyTable& table)
{
    std::ostringstream os;
    os << "mcs,ul_rate,ul_preamble,dl_rate,dl_preamble,legacy_rate,legacy_preamble\n";
    for (const auto& e : table.GetEntries())
    {
        os << e.mcs << ',' << FormatDouble(e.ulRate) << ',' << FormatDouble(e.ulPreamble) << ','
           << FormatDouble(e.dlRate) << ',' << FormatDouble(e.dlPreamble) << ','
           << FormatDouble(e.legacyRate) << ',' << FormatDouble(e.legacyPreamble) << '\n';
    }
    return os.str();
}

std::string
SerializeBerTable(const BerTable& table)
{
    std::ostringstream os;
    os << "# bandwidth_mhz=" << FormatDouble(table.GetBandwidth()) << '\n';
    os << "snr_db";
    for (int m = 0; m < kMcsCount; ++m)
    {
        os << ",mcs" << m;
    }
    os << '\n';
    for (const auto& row : table.GetRows())
    {
        os << FormatDouble(row.snrDb);
        for (double b : row.ber)
        {
            os << ',' << FormatDouble(b);
        }
        os << '\n';
    }
    return os.str();
}

PhyTable
LoadPhyTable(const std::optional<std::filesystem::path>& path, std::uint32_t stations)
{
    if (!path)
    {
        return EmbeddedPhyTable(stations);
    }
    auto in = OpenOrThrow(*path);
    return ParsePhyTable(in, stations);
}

BerTable
LoadBerTable(const std::optional<std::filesystem::path>& path, std::optional<MHz_u> bandwidth)
{
    if (!path)
    {
        if (bandwidth && *bandwidth != 160)
        {
            throw Error(ErrorCode::Config,
                        "no embedded BER table for " + FormatDouble(*bandwidth) + " MHz");
        }
        return EmbeddedBerTable160();
    }
    auto in = OpenOrThrow(*path);
    return ParseBerTable(in, bandwidth);
}

TableSet
TableSet::Embedded()
{
    TableSet set;
    for (std::uint32_t n : {4u, 8u, 16u, 32u})
    {
        set.phy.emplace(n, EmbeddedPhyTable(n));
    }
    set.ber.emplace(160, EmbeddedBerTable160());
    return set;
}

const PhyTable&
TableSet::ResolvePhy(std::uint32_t stations) const
{
    auto it = phy.find(stations);
    if (it == phy.end())
    {
        throw Error(ErrorCode::Config,
                    "no PHY table for " + std::to_string(stations) + " stations");
    }
    return it->second;
}

const BerTable&
TableSet::ResolveBer(std::uint32_t stations) const
{
    auto bw = BandwidthForStations(stations);
    if (auto it = ber.find(bw); it != ber.end())
    {
        return it->second;
    }
    if (assumeSameBer)
    {
        if (auto it = ber.find(160); it != ber.end())
        {
            return it->second;
        }
    }
    throw Error(ErrorCode::Config,
                "no BER table for " + FormatDouble(bw) + " MHz (" + std::to_string(stations) +
                    " stations); supply --ber-table or pass --assume-same-ber");
}

} // namespace axtcp
