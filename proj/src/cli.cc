/*
 * SPDX-License-Identifier: GPL-2.0-only
 */

#include "axtcp/cli.h"

#include "axtcp/report.h"
#include "axtcp/sim-engine.h"
#include "axtcp/text-util.h"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <omp.h>
#include <ostream>
#include <set>
#include <sstream>

namespace axtcp
{

namespace
{

struct FlagSpec
{
    const char* key;
    bool isSwitch;
    const char* help;
};

const std::vector<FlagSpec> kScenarioFlags = {
    {"stations", false, "number of stations: 4, 8, 16 or 32 (default 4)"},
    {"segment", false, "TCP Data payload bytes (default 1460)"},
    {"strategy", false, "TXOP strategy 1, 2 or 3 (default 2)"},
    {"load", false, "strategy 3 load in (0,1]"},
    {"snr", false, "SNR in dB; sweep accepts a value list"},
    {"mcs", false, "force the MCS pair as DL:UL"},
    {"dl-ber", false, "force the DL bit error rate"},
    {"txops", false, "TXOPs per scenario (default 10000)"},
    {"seed", false, "64-bit RNG seed (default 1)"},
    {"phy-table", false, "PHY rate CSV for the configured station count"},
    {"ber-table", false, "BER CSV for the configured bandwidth"},
    {"assume-same-ber", true, "use the 160 MHz BER table for every bandwidth"},
    {"tf-bytes", false, "trigger frame size (default 100)"},
    {"back-bytes", false, "BAck frame size (default 64)"},
    {"mba-base", false, "Multi-STA BAck fixed bytes (default 24)"},
    {"mba-per-sta", false, "Multi-STA BAck bytes per station (default 40)"},
    {"max-cycles", false, "DL cycles per TXOP before giving up (default 10000)"},
    {"s3-quota", true, "strategy 3 sends only Load*N*S new segments per TXOP"},
    {"out", false, "output file (default stdout)"},
};

const std::vector<FlagSpec> kSimulateFlags = {
    {"trace", false, "per-phase trace CSV"},
};

const std::vector<FlagSpec> kSweepFlags = {
    {"axis", false, "snr, load, stations or segment"},
    {"values", false, "value list: a,b,c | a:b:linN | a:b:logN | a:b:step | table"},
    {"series", false, "strategies to run, e.g. 1,2,3@0.03,3@0.95"},
    {"serial", true, "run points on one thread"},
    {"threads", false, "OpenMP thread count"},
};

const std::vector<FlagSpec> kPlotFlags = {
    {"in", false, "results CSV"},
    {"layout", false, "goodput_vs_snr, delay_vs_snr, goodput_vs_delay or goodput_vs_load"},
    {"out", false, "output file (default stdout)"},
};

const std::vector<FlagSpec> kTablesFlags = {
    {"kind", false, "phy or ber"},
    {"stations", false, "station count selecting the PHY table (default 4)"},
    {"phy-table", false, "PHY CSV to validate and re-emit"},
    {"ber-table", false, "BER CSV to validate and re-emit"},
    {"out", false, "output file (default stdout)"},
};

using Values = std::map<std::string, std::string>;

struct Bound
{
    std::vector<FlagSpec> specs;
    std::map<std::string, std::string> raw;
    std::map<std::string, CLI::Option*> opts;
    std::string configPath;
    CLI::Option* config{nullptr};
};

void
Bind(CLI::App* sub, Bound& b, std::initializer_list<const std::vector<FlagSpec>*> lists)
{
    for (const auto* list : lists)
    {
        for (const auto& f : *list)
        {
            if (b.raw.contains(f.key))
            {
                continue;
            }
            b.specs.push_back(f);
            const std::string name = std::string("--") + f.key;
            b.opts[f.key] = f.isSwitch ? sub->add_flag(name, f.help)
                                       : sub->add_option(name, b.raw[f.key], f.help);
        }
    }
    b.config = sub->add_option("--config", b.configPath, "flat key=value file; flags win");
}

/// Command-line values, completed from --config for keys not given as flags.
Values
Collect(const Bound& b)
{
    Values v;
    for (const auto& f : b.specs)
    {
        const auto* opt = b.opts.at(f.key);
        if (opt->count() > 0)
        {
            v[f.key] = f.isSwitch ? "true" : b.raw.at(f.key);
        }
    }
    if (b.config->count() == 0)
    {
        return v;
    }
    std::ifstream in(b.configPath);
    if (!in)
    {
        throw Error(ErrorCode::Io, "cannot open config file " + b.configPath);
    }
    std::string line;
    std::size_t lineNo = 0;
    while (std::getline(in, line))
    {
        ++lineNo;
        const auto t = Trim(line);
        if (t.empty() || t.front() == '#')
        {
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string_view::npos)
        {
            throw Error(ErrorCode::Usage,
                        b.configPath + ":" + std::to_string(lineNo) + ": expected key=value");
        }
        const std::string key(Trim(t.substr(0, eq)));
        const std::string value(Trim(t.substr(eq + 1)));
        const bool known = std::any_of(b.specs.begin(), b.specs.end(), [&](const FlagSpec& f) {
            return key == f.key;
        });
        if (!known)
        {
            throw Error(ErrorCode::Usage,
                        b.configPath + ":" + std::to_string(lineNo) + ": unknown key '" + key +
                            "'");
        }
        v.try_emplace(key, value);
    }
    return v;
}

template <typename F>
auto
Convert(const std::string& key, const std::string& text, F&& parse)
{
    try
    {
        return parse(text);
    }
    catch (const Error& e)
    {
        throw Error(ErrorCode::Usage, "--" + key + ": " + e.what());
    }
}

std::optional<std::string>
Get(const Values& v, const std::string& key)
{
    auto it = v.find(key);
    return it == v.end() ? std::nullopt : std::optional(it->second);
}

std::uint64_t
GetUnsigned(const Values& v, const std::string& key, std::uint64_t fallback)
{
    auto s = Get(v, key);
    return s ? Convert(key, *s, [](const std::string& t) { return ParseUnsigned(t); }) : fallback;
}

double
GetDouble(const Values& v, const std::string& key, double fallback)
{
    auto s = Get(v, key);
    return s ? Convert(key, *s, [](const std::string& t) { return ParseDouble(t); }) : fallback;
}

bool
GetSwitch(const Values& v, const std::string& key)
{
    auto s = Get(v, key);
    if (!s)
    {
        return false;
    }
    if (*s == "true" || *s == "1" || *s == "yes")
    {
        return true;
    }
    if (*s == "false" || *s == "0" || *s == "no")
    {
        return false;
    }
    throw Error(ErrorCode::Usage, "--" + key + ": expected true or false, got '" + *s + "'");
}

bool
IsValueList(std::string_view text)
{
    return text.find_first_of(":,") != std::string_view::npos || text == "table";
}

McsPair
ParseMcsPair(const std::string& text)
{
    const auto f = SplitFields(text, ':');
    if (f.size() != 2)
    {
        throw Error(ErrorCode::Usage, "--mcs: expected DL:UL, got '" + text + "'");
    }
    return McsPair{static_cast<int>(Convert("mcs", f[0], ParseUnsigned)),
                   static_cast<int>(Convert("mcs", f[1], ParseUnsigned))};
}

/// Builds the scenario; `loadOptional` relaxes the strategy 3 --load requirement.
ScenarioConfig
BuildScenario(const Values& v, bool loadOptional)
{
    ScenarioConfig cfg;
    cfg.stations = static_cast<std::uint32_t>(GetUnsigned(v, "stations", cfg.stations));
    try
    {
        BandwidthForStations(cfg.stations);
    }
    catch (const Error& e)
    {
        throw Error(ErrorCode::Usage, std::string("--stations: ") + e.what());
    }
    cfg.segmentBytes = static_cast<Bytes>(GetUnsigned(v, "segment", cfg.segmentBytes));
    const auto strategyId = GetUnsigned(v, "strategy", 2);
    if (strategyId < 1 || strategyId > 3)
    {
        throw Error(ErrorCode::Usage, "--strategy must be 1, 2 or 3");
    }
    cfg.strategy = static_cast<Strategy>(strategyId);
    if (auto load = Get(v, "load"))
    {
        if (cfg.strategy != Strategy::MaxGoodput)
        {
            throw Error(ErrorCode::Usage, "--load applies to strategy 3 only");
        }
        cfg.load = GetDouble(v, "load", 1.0);
    }
    else if (cfg.strategy == Strategy::MaxGoodput && !loadOptional)
    {
        throw Error(ErrorCode::Usage, "--strategy 3 requires --load");
    }
    if (auto snr = Get(v, "snr"); snr && !IsValueList(*snr))
    {
        cfg.snrDb = GetDouble(v, "snr", cfg.snrDb);
    }
    if (auto mcs = Get(v, "mcs"))
    {
        cfg.mcsOverride = ParseMcsPair(*mcs);
    }
    if (Get(v, "dl-ber"))
    {
        cfg.dlBerOverride = GetDouble(v, "dl-ber", 0);
    }
    cfg.txopCount = GetUnsigned(v, "txops", cfg.txopCount);
    cfg.seed = GetUnsigned(v, "seed", cfg.seed);
    cfg.frames.tfBytes = static_cast<Bytes>(GetUnsigned(v, "tf-bytes", cfg.frames.tfBytes));
    cfg.frames.backBytes = static_cast<Bytes>(GetUnsigned(v, "back-bytes", cfg.frames.backBytes));
    cfg.frames.mbaBaseBytes =
        static_cast<Bytes>(GetUnsigned(v, "mba-base", cfg.frames.mbaBaseBytes));
    cfg.frames.mbaPerStationBytes =
        static_cast<Bytes>(GetUnsigned(v, "mba-per-sta", cfg.frames.mbaPerStationBytes));
    cfg.maxCycles = static_cast<std::uint32_t>(GetUnsigned(v, "max-cycles", cfg.maxCycles));
    cfg.strategy3Quota = GetSwitch(v, "s3-quota");
    cfg.tables.assumeSameBer = GetSwitch(v, "assume-same-ber");
    if (auto path = Get(v, "phy-table"))
    {
        cfg.tables.phy.insert_or_assign(cfg.stations, LoadPhyTable(*path, cfg.stations));
    }
    if (auto path = Get(v, "ber-table"))
    {
        auto table = LoadBerTable(*path, BandwidthForStations(cfg.stations));
        cfg.tables.ber.insert_or_assign(table.GetBandwidth(), std::move(table));
    }
    return cfg;
}

Values
Echo(const ScenarioConfig& cfg, const Values& given)
{
    Values e;
    e["stations"] = std::to_string(cfg.stations);
    e["segment"] = std::to_string(cfg.segmentBytes);
    e["strategy"] = std::to_string(static_cast<int>(cfg.strategy));
    if (cfg.strategy == Strategy::MaxGoodput)
    {
        e["load"] = FormatDouble(cfg.load);
    }
    e["snr"] = FormatDouble(cfg.snrDb);
    e["txops"] = std::to_string(cfg.txopCount);
    e["seed"] = std::to_string(cfg.seed);
    e["tf-bytes"] = std::to_string(cfg.frames.tfBytes);
    e["back-bytes"] = std::to_string(cfg.frames.backBytes);
    e["mba-base"] = std::to_string(cfg.frames.mbaBaseBytes);
    e["mba-per-sta"] = std::to_string(cfg.frames.mbaPerStationBytes);
    e["max-cycles"] = std::to_string(cfg.maxCycles);
    e["assume-same-ber"] = cfg.tables.assumeSameBer ? "true" : "false";
    e["s3-quota"] = cfg.strategy3Quota ? "true" : "false";
    if (cfg.mcsOverride)
    {
        e["mcs"] = std::to_string(cfg.mcsOverride->dl) + ":" + std::to_string(cfg.mcsOverride->ul);
    }
    if (cfg.dlBerOverride)
    {
        e["dl-ber"] = FormatDouble(*cfg.dlBerOverride);
    }
    for (const char* key : {"phy-table", "ber-table"})
    {
        if (auto p = Get(given, key))
        {
            e[key] = *p;
        }
    }
    return e;
}

/// Runs `body` against --out when given, otherwise against `out`.
template <typename F>
void
WithOutput(const Values& v, std::ostream& out, F&& body)
{
    auto path = Get(v, "out");
    if (!path)
    {
        body(out);
        return;
    }
    std::ofstream file(*path, std::ios::binary);
    if (!file)
    {
        throw Error(ErrorCode::Io, "cannot write " + *path);
    }
    body(file);
    if (!file)
    {
        throw Error(ErrorCode::Io, "write failed for " + *path);
    }
}

int
RunSimulate(const Values& v, std::ostream& out)
{
    const auto cfg = BuildScenario(v, false);
    const auto tracePath = Get(v, "trace");
    std::vector<TracePhase> trace;
    const auto id = StrategyKey(static_cast<int>(cfg.strategy),
                                cfg.strategy == Strategy::MaxGoodput ? std::optional(cfg.load)
                                                                     : std::nullopt);
    const auto metrics = Simulate(cfg, tracePath ? &trace : nullptr);
    if (tracePath)
    {
        std::ofstream file(*tracePath, std::ios::binary);
        if (!file)
        {
            throw Error(ErrorCode::Io, "cannot write " + *tracePath);
        }
        WriteTraceCsv(file, trace);
    }
    WithOutput(v, out, [&](std::ostream& os) {
        WriteResultsCsv(os, Echo(cfg, v), {MakeResultRow(id, cfg, metrics)});
    });
    return 0;
}

struct Series
{
    Strategy strategy;
    std::optional<double> load;
};

std::vector<Series>
ParseSeries(const std::string& text)
{
    std::vector<Series> out;
    for (const auto& item : SplitFields(text))
    {
        const auto at = item.find('@');
        const auto id = Convert("series", item.substr(0, at), ParseUnsigned);
        if (id < 1 || id > 3)
        {
            throw Error(ErrorCode::Usage, "--series: unknown strategy in '" + item + "'");
        }
        Series s{static_cast<Strategy>(id), std::nullopt};
        if (at != std::string::npos)
        {
            if (s.strategy != Strategy::MaxGoodput)
            {
                throw Error(ErrorCode::Usage, "--series: only strategy 3 takes @load");
            }
            s.load = Convert("series", item.substr(at + 1), ParseDouble);
        }
        out.push_back(s);
    }
    if (out.empty())
    {
        throw Error(ErrorCode::Usage, "--series is empty");
    }
    return out;
}

int
RunSweep(const Values& given, std::ostream& out, std::ostream& err)
{
    Values v = given;
    std::string axisName;
    std::string valuesText;
    if (auto a = Get(v, "axis"))
    {
        axisName = *a;
        valuesText = Get(v, "values").value_or("");
        if (valuesText.empty() && axisName == "snr" && Get(v, "snr"))
        {
            valuesText = *Get(v, "snr");
        }
    }
    else if (auto snr = Get(v, "snr"); snr && IsValueList(*snr) && !Get(v, "values"))
    {
        axisName = "snr";
        valuesText = *snr;
    }
    else
    {
        throw Error(ErrorCode::Usage, "sweep requires --axis and --values");
    }
    if (valuesText.empty())
    {
        throw Error(ErrorCode::Usage, "sweep requires --values");
    }
    const auto axis = SweepAxisFromString(axisName);
    if (axis == SweepAxis::Load && !Get(v, "strategy") && !Get(v, "series"))
    {
        v["strategy"] = "3";
    }

    std::vector<Series> series;
    if (auto s = Get(v, "series"))
    {
        series = ParseSeries(*s);
        v.erase("load");
        v["strategy"] = "2";
    }
    auto base = BuildScenario(v, true);
    if (series.empty())
    {
        series.push_back({base.strategy,
                          Get(v, "load") ? std::optional(base.load) : std::nullopt});
    }
    for (const auto& s : series)
    {
        if (s.strategy == Strategy::MaxGoodput && !s.load && axis != SweepAxis::Load)
        {
            throw Error(ErrorCode::Usage, "strategy 3 series need a load, e.g. 3@0.03");
        }
        if (axis == SweepAxis::Load && s.strategy != Strategy::MaxGoodput)
        {
            throw Error(ErrorCode::Usage, "a load sweep runs strategy 3 only");
        }
    }

    std::vector<double> values;
    if (valuesText == "table")
    {
        if (axis != SweepAxis::Snr)
        {
            throw Error(ErrorCode::Usage, "--values table applies to the snr axis");
        }
        for (const auto& row : base.tables.ResolveBer(base.stations).GetRows())
        {
            values.push_back(row.snrDb);
        }
    }
    else
    {
        values = ParseValueList(valuesText);
    }

    const bool serial = GetSwitch(v, "serial");
    if (auto threads = Get(v, "threads"))
    {
        const auto n = GetUnsigned(v, "threads", 1);
        if (n == 0)
        {
            throw Error(ErrorCode::Usage, "--threads must be at least 1");
        }
        omp_set_num_threads(static_cast<int>(n));
    }

    std::vector<ResultRow> rows;
    for (const auto& s : series)
    {
        auto cfg = base;
        cfg.strategy = s.strategy;
        if (s.load)
        {
            cfg.load = *s.load;
        }
        const auto key = StrategyKey(static_cast<int>(s.strategy), s.load);
        const auto points =
            serial ? SweepSerial(cfg, axis, values) : Sweep(cfg, axis, values);
        for (const auto& p : points)
        {
            const auto id = key + "/" + std::string(ToString(axis)) + "=" + FormatDouble(p.value);
            rows.push_back(MakeResultRow(id, p.config, p.metrics, p.errorCode, p.error));
            if (p.errorCode)
            {
                err << "warning," << ToString(*p.errorCode) << "," << id << ": " << p.error
                    << "\n";
            }
        }
    }

    auto echo = Echo(base, given);
    echo.erase("strategy");
    echo.erase("load");
    echo["axis"] = std::string(ToString(axis));
    echo.erase(std::string(ToString(axis)));
    std::string joined;
    for (std::size_t i = 0; i < values.size(); ++i)
    {
        joined += (i ? "," : "") + FormatDouble(values[i]);
    }
    echo["values"] = joined;
    std::string seriesText;
    for (std::size_t i = 0; i < series.size(); ++i)
    {
        seriesText += (i ? "," : "") + std::to_string(static_cast<int>(series[i].strategy)) +
                      (series[i].load ? "@" + FormatDouble(*series[i].load) : "");
    }
    echo["series"] = seriesText;
    WithOutput(v, out, [&](std::ostream& os) { WriteResultsCsv(os, echo, rows); });
    return 0;
}

int
RunPlot(const Values& v, std::ostream& out, std::ostream& err)
{
    const auto in = Get(v, "in");
    const auto layoutName = Get(v, "layout");
    if (!in || !layoutName)
    {
        throw Error(ErrorCode::Usage, "plot requires --in and --layout");
    }
    const auto layout = PlotLayoutFromString(*layoutName);
    std::ifstream file(*in);
    if (!file)
    {
        throw Error(ErrorCode::Io, "cannot open " + *in);
    }
    const auto data = BuildPlotData(ReadResultsCsv(file), layout);
    for (const auto& w : data.warnings)
    {
        err << "warning,validation," << w << "\n";
    }
    WithOutput(v, out, [&](std::ostream& os) { WritePlotCsv(os, data); });
    return 0;
}

int
RunTables(const Values& v, std::ostream& out)
{
    const auto kind = Get(v, "kind").value_or("");
    const auto stations = static_cast<std::uint32_t>(GetUnsigned(v, "stations", 4));
    std::string text;
    if (kind == "phy")
    {
        text = SerializePhyTable(LoadPhyTable(Get(v, "phy-table"), stations));
    }
    else if (kind == "ber")
    {
        auto path = Get(v, "ber-table");
        text = SerializeBerTable(LoadBerTable(path, std::nullopt));
    }
    else
    {
        throw Error(ErrorCode::Usage, "tables requires --kind phy or --kind ber");
    }
    WithOutput(v, out, [&](std::ostream& os) { os << text; });
    return 0;
}

int
RunPacking(const Values& v, std::ostream& out)
{
    auto cfg = BuildScenario(v, true);
    const auto ctx = PrepareTxopContext(cfg);
    const Bits lData = 8 * static_cast<Bits>(cfg.segmentBytes);
    const auto result =
        OptimalSegmentsPerMpdu(ctx.dlBer, ctx.dl.dlRate, ctx.msduLen, lData, cfg.arithmetic);
    WithOutput(v, out, [&](std::ostream& os) {
        os << "# dl_mcs=" << ctx.dl.mcs << "\n";
        os << "# dl_ber=" << FormatDouble(ctx.dlBer) << "\n";
        os << "# x_star=" << result.xStar << "\n";
        os << "x,u_mbps\n";
        for (std::size_t i = 0; i < result.table.size(); ++i)
        {
            os << i + 1 << "," << FormatDouble(result.table[i]) << "\n";
        }
    });
    return 0;
}

} // namespace

int
ExitCodeFor(ErrorCode code)
{
    switch (code)
    {
    case ErrorCode::Usage:
    case ErrorCode::Config:
        return 2;
    case ErrorCode::Io:
        return 3;
    default:
        return 1;
    }
}

std::vector<double>
ParseValueList(std::string_view text)
{
    const auto parts = SplitFields(text, ':');
    std::vector<double> out;
    if (parts.size() == 1)
    {
        for (const auto& f : SplitFields(text, ','))
        {
            out.push_back(Convert("values", f, ParseDouble));
        }
        return out;
    }
    if (parts.size() != 3)
    {
        throw Error(ErrorCode::Usage, "--values: expected a:b:linN, a:b:logN or a:b:step");
    }
    const double a = Convert("values", parts[0], ParseDouble);
    const double b = Convert("values", parts[1], ParseDouble);
    const auto& spec = parts[2];
    if (spec.starts_with("lin") || spec.starts_with("log"))
    {
        const auto n = Convert("values", spec.substr(3), ParseUnsigned);
        if (n == 0)
        {
            throw Error(ErrorCode::Usage, "--values: point count must be positive");
        }
        const bool log = spec.starts_with("log");
        if (log && !(a > 0 && b > 0))
        {
            throw Error(ErrorCode::Usage, "--values: log spacing needs positive bounds");
        }
        for (std::uint64_t k = 0; k < n; ++k)
        {
            const double t = n == 1 ? 0.0 : static_cast<double>(k) / static_cast<double>(n - 1);
            out.push_back(log ? a * std::pow(b / a, t) : a + (b - a) * t);
        }
        if (n > 1)
        {
            out.back() = b;
        }
        return out;
    }
    const double step = Convert("values", spec, ParseDouble);
    if (!(step > 0) || b < a)
    {
        throw Error(ErrorCode::Usage, "--values: step must be positive and a <= b");
    }
    for (std::uint64_t k = 0;; ++k)
    {
        const double x = a + static_cast<double>(k) * step;
        if (x > b + 1e-9 * step)
        {
            break;
        }
        out.push_back(x);
    }
    return out;
}

int
Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Monte-Carlo simulator of TCP-aware 802.11ax MU TXOP scheduling", "axtcp-sim"};
    app.require_subcommand(1);
    app.set_help_flag("-h,--help");

    auto* simulate = app.add_subcommand("simulate", "run one scenario");
    auto* sweep = app.add_subcommand("sweep", "run a scenario over a list of axis values");
    auto* plot = app.add_subcommand("plot", "turn a results CSV into tidy plot data");
    auto* tables = app.add_subcommand("tables", "export or validate PHY/BER tables");
    auto* packing = app.add_subcommand("packing", "goodput versus segments per MPDU");

    Bound bSim, bSweep, bPlot, bTables, bPacking;
    Bind(simulate, bSim, {&kScenarioFlags, &kSimulateFlags});
    Bind(sweep, bSweep, {&kScenarioFlags, &kSweepFlags});
    Bind(plot, bPlot, {&kPlotFlags});
    Bind(tables, bTables, {&kTablesFlags});
    Bind(packing, bPacking, {&kScenarioFlags});

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try
    {
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp&)
    {
        out << app.help();
        return 0;
    }
    catch (const CLI::ParseError& e)
    {
        err << "error," << ToString(ErrorCode::Usage) << "," << e.what() << "\n";
        return 2;
    }

    try
    {
        if (simulate->parsed())
        {
            return RunSimulate(Collect(bSim), out);
        }
        if (sweep->parsed())
        {
            return RunSweep(Collect(bSweep), out, err);
        }
        if (plot->parsed())
        {
            return RunPlot(Collect(bPlot), out, err);
        }
        if (tables->parsed())
        {
            return RunTables(Collect(bTables), out);
        }
        return RunPacking(Collect(bPacking), out);
    }
    catch (const Error& e)
    {
        err << "error," << ToString(e.GetCode()) << "," << e.what() << "\n";
        return ExitCodeFor(e.GetCode());
    }
    catch (const std::exception& e)
    {
        err << "error," << ToString(ErrorCode::Validation) << "," << e.what() << "\n";
        return 1;
    }
}

} // namespace axtcp
