/*
 * SPDX-License-Identifier: GPL-2.0-only
 */

#ifndef AXTCP_PHY_TABLES_H
#define AXTCP_PHY_TABLES_H

#include "axtcp/units.h"

#include <array>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace axtcp
{

/**
 * @brief PHY rates and preambles of one MCS for the three transmission kinds
 * used in a TXOP: UL MU data (GI 1.6 us), DL MU data (GI 0.8 us) and the
 * legacy-mode TF / Multi-Station BAck.
 *
 * HE rates are per spatial stream; every station uses one stream.
 */
struct McsEntry
{
    int mcs{0};
    Mbps_u ulRate{0};
    us_u ulPreamble{0};
    Mbps_u dlRate{0};
    us_u dlPreamble{0};
    Mbps_u legacyRate{0};
    us_u legacyPreamble{0};

    bool operator==(const McsEntry&) const = default;
};

/// RU bandwidth that serves a group of `stations` stations (4 -> 160 MHz ... 32 -> 20 MHz).
MHz_u BandwidthForStations(std::uint32_t stations);

/**
 * @brief The 12-entry MCS table for one station count.
 */
class PhyTable
{
  public:
    /// Throws Error(Validation) unless entries are indexed 0..11 in order and every rate is positive.
    PhyTable(std::uint32_t stations, const std::array<McsEntry, kMcsCount>& entries);

    std::uint32_t GetStationCount() const
    {
        return m_stations;
    }

    MHz_u GetBandwidth() const
    {
        return BandwidthForStations(m_stations);
    }

    const std::array<McsEntry, kMcsCount>& GetEntries() const
    {
        return m_entries;
    }

    bool operator==(const PhyTable&) const = default;

  private:
    std::uint32_t m_stations;
    std::array<McsEntry, kMcsCount> m_entries;
};

/// Throws Error(Domain) when mcs is outside 0..11.
const McsEntry& LookupMcs(const PhyTable& table, int mcs);

using BerRow = std::array<double, kMcsCount>;

/**
 * @brief SNR -> per-MCS bit error rate for one RU bandwidth.
 *
 * Rows are sorted by strictly ascending SNR. Within a row BER is
 * non-decreasing in MCS; for a fixed MCS it is non-increasing in SNR.
 */
class BerTable
{
  public:
    struct Row
    {
        double snrDb;
        BerRow ber;

        bool operator==(const Row&) const = default;
    };

    /// Throws Error(Validation) on any invariant violation (including duplicate SNR rows).
    BerTable(MHz_u bandwidth, std::vector<Row> rows);

    MHz_u GetBandwidth() const
    {
        return m_bandwidth;
    }

    const std::vector<Row>& GetRows() const
    {
        return m_rows;
    }

    /// Floor step lookup: the row with the largest SNR not above the query.
    const Row& RowAt(double snrDb) const;

    bool operator==(const BerTable&) const = default;

  private:
    MHz_u m_bandwidth;
    std::vector<Row> m_rows;
};

/// Throws Error(ChannelUnusable) below the lowest row and Error(Domain) for a bad MCS.
double LookupBer(const BerTable& table, double snrDb, int mcs);

/// The embedded Table of PHY rates for 4, 8, 16 or 32 stations.
PhyTable EmbeddedPhyTable(std::uint32_t stations);

/// The embedded 160 MHz SNR/BER table (the only bandwidth with published values).
BerTable EmbeddedBerTable160();

/*
 * CSV I/O. PHY: header `mcs,ul_rate,ul_preamble,dl_rate,dl_preamble,legacy_rate,legacy_preamble`
 * followed by 12 rows. BER: header `snr_db,mcs0,...,mcs11`, rows ascending by SNR.
 * Lines starting with '#' are comments; a BER file may declare `# bandwidth_mhz=80`.
 */
PhyTable ParsePhyTable(std::istream& in, std::uint32_t stations);
BerTable ParseBerTable(std::istream& in, std::optional<MHz_u> bandwidth);
std::string SerializePhyTable(const PhyTable& table);
std::string SerializeBerTable(const BerTable& table);

/// Embedded table when `path` is empty, otherwise the validated file contents.
PhyTable LoadPhyTable(const std::optional<std::filesystem::path>& path, std::uint32_t stations);
BerTable LoadBerTable(const std::optional<std::filesystem::path>& path,
                      std::optional<MHz_u> bandwidth);

/**
 * @brief All tables a scenario may draw from, keyed by station count / bandwidth.
 *
 * Defaults to the embedded PHY tables for every station count and the
 * embedded 160 MHz BER table. With assumeSameBer, a missing bandwidth falls
 * back to the 160 MHz BER table (a modeling approximation).
 */
struct TableSet
{
    std::map<std::uint32_t, PhyTable> phy;
    std::map<MHz_u, BerTable> ber;
    bool assumeSameBer{false};

    static TableSet Embedded();

    /// Throws Error(Config) when no PHY table exists for the station count.
    const PhyTable& ResolvePhy(std::uint32_t stations) const;
    /// Throws Error(Config) when no BER table exists and assumeSameBer is off.
    const BerTable& ResolveBer(std::uint32_t stations) const;
};

} // namespace axtcp

#endif /* AXTCP_PHY_TABLES_H */
