// Copyright 2026 The lyreval Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// lyreval: command line front end.
//
//   lyreval segment  --audio vocals.wav [--config vad.json] --out segments.json
//   lyreval samples  --lyrics song.json --kind merged|group --out samples.json
//   lyreval run      --manifest m.json --task short|long ... --out dir
//   lyreval report   --results a.json b.json --layout short|long|language|per-song --out f
//   lyreval align    --ref ref.txt --hyp hyp.txt [--dump align.txt]
//   lyreval transfer --timed words.json --lyrics song.json --out lines.json
//   lyreval separate --adapter "<cmd>" --audio mix.wav --model mdx --out vocals.wav

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "lyreval/adapter.h"
#include "lyreval/align.h"
#include "lyreval/error.h"
#include "lyreval/io.h"
#include "lyreval/manifest.h"
#include "lyreval/metrics.h"
#include "lyreval/pipeline.h"
#include "lyreval/report.h"
#include "lyreval/sampling.h"
#include "lyreval/timing_transfer.h"
#include "lyreval/vad.h"
#include "lyreval/wav.h"

namespace {

using namespace lyreval;

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void print_rates(const MetricsReport& r) {
  const MetricPercentages p = to_percentages(r);
  std::cout << "WER " << format_percent(p.wer) << "  SR " << format_percent(p.sr)
            << "  DR " << format_percent(p.dr) << "  IR " << format_percent(p.ir)
            << "  IR10 " << format_percent(p.ir10) << "  DR_NL "
            << format_percent(p.dr_nl) << "  DR_BV " << format_percent(p.dr_bv)
            << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lyrics transcription evaluation toolkit"};
  app.require_subcommand(1);

  // segment
  auto* segment = app.add_subcommand("segment", "RMS-VAD segmentation of a vocal track");
  std::string seg_audio, seg_config, seg_out;
  segment->add_option("--audio", seg_audio, "Separated vocals (WAV)")->required();
  segment->add_option("--config", seg_config, "VAD config JSON");
  segment->add_option("--out", seg_out, "Segment list JSON")->required();

  // samples
  auto* samples = app.add_subcommand("samples", "Build short-form samples from line timings");
  std::string smp_lyrics, smp_kind = "group", smp_out;
  samples->add_option("--lyrics", smp_lyrics, "Lyrics JSON")->required();
  samples->add_option("--kind", smp_kind, "merged|group")
      ->check(CLI::IsMember({"merged", "group"}));
  samples->add_option("--out", smp_out, "Sample list JSON")->required();

  // run
  auto* run = app.add_subcommand("run", "Run a short- or long-form evaluation");
  std::string run_manifest, run_task = "long", run_variant = "mix", run_kind = "group",
              run_segmenter = "rms-vad", run_vad_variant = "separated_mdx_extra",
              run_adapter, run_out, run_cache, run_vad_config;
  int run_repeats = 5;
  std::size_t run_jobs = 1;
  bool run_replay = false, run_no_language = false, run_no_cache = false;
  const std::vector<std::string> variants(std::begin(kAudioVariants),
                                          std::end(kAudioVariants));
  run->add_option("--manifest", run_manifest, "Dataset manifest JSON")->required();
  run->add_option("--task", run_task, "short|long")->check(CLI::IsMember({"short", "long"}));
  run->add_option("--variant", run_variant, "Audio to transcribe")
      ->check(CLI::IsMember(variants));
  run->add_option("--kind", run_kind, "Short-form samples: merged|group")
      ->check(CLI::IsMember({"merged", "group"}));
  run->add_option("--segmenter", run_segmenter, "Long-form segmenter: native|rms-vad")
      ->check(CLI::IsMember({"native", "rms-vad"}));
  run->add_option("--vad-variant", run_vad_variant, "Audio used for RMS-VAD boundaries")
      ->check(CLI::IsMember(variants));
  run->add_option("--repeats", run_repeats, "Transcription runs to average")
      ->check(CLI::PositiveNumber);
  run->add_option("--adapter", run_adapter, "Transcriber adapter command");
  run->add_option("--out", run_out, "Output directory")->required();
  run->add_option("--cache-dir", run_cache, "Transcript cache (default <out>/cache)");
  run->add_flag("--no-cache", run_no_cache, "Always call the adapter");
  run->add_flag("--replay", run_replay, "Only use cached transcripts");
  run->add_flag("--no-language", run_no_language, "Do not force the song language");
  run->add_option("--vad-config", run_vad_config, "VAD config JSON");
  run->add_option("--jobs", run_jobs, "Songs processed concurrently")
      ->check(CLI::PositiveNumber);

  // report
  auto* report = app.add_subcommand("report", "Render tables from run results");
  std::vector<std::string> rep_results;
  std::string rep_layout = "long", rep_out;
  report->add_option("--results", rep_results, "run_result.json files")->required();
  report->add_option("--layout", rep_layout, "short|long|language|per-song")
      ->check(CLI::IsMember({"short", "long", "language", "per-song"}));
  report->add_option("--out", rep_out, "Output file")->required();

  // align
  auto* align_cmd = app.add_subcommand("align", "Align two transcripts and print metrics");
  std::string aln_ref, aln_hyp, aln_dump;
  align_cmd->add_option("--ref", aln_ref, "Reference text file")->required();
  align_cmd->add_option("--hyp", aln_hyp, "Hypothesis text file")->required();
  align_cmd->add_option("--dump", aln_dump, "Write the alignment dump here");

  // transfer
  auto* transfer = app.add_subcommand("transfer", "Derive line timings from word timings");
  std::string trn_timed, trn_lyrics, trn_out;
  transfer->add_option("--timed", trn_timed, "[{text,start,end}] JSON")->required();
  transfer->add_option("--lyrics", trn_lyrics, "Lyrics JSON (timings ignored)")->required();
  transfer->add_option("--out", trn_out, "Derived lines JSON")->required();

  // separate
  auto* separate = app.add_subcommand("separate", "Ask the adapter for separated vocals");
  std::string sep_adapter, sep_audio, sep_model = "mdx_extra", sep_out;
  separate->add_option("--adapter", sep_adapter, "Separator adapter command")->required();
  separate->add_option("--audio", sep_audio, "Input mix")->required();
  separate->add_option("--model", sep_model, "mdx|mdx_extra")
      ->check(CLI::IsMember({"mdx", "mdx_extra"}));
  separate->add_option("--out", sep_out, "Output vocals WAV")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*segment) {
      const VadConfig cfg = seg_config.empty() ? VadConfig{}
                                               : vad_config_from_json(read_json_file(seg_config));
      write_json_file(seg_out, segments_to_json(rms_vad(load_audio(seg_audio), cfg)));
    } else if (*samples) {
      const LyricsFile lyrics = load_lyrics(smp_lyrics);
      std::vector<Sample> out;
      std::size_t excluded = 0;
      if (smp_kind == "merged") {
        MergeResult m = merge_overlapping_lines(lyrics.lines);
        out = std::move(m.samples);
        excluded = m.excluded;
      } else {
        GroupResult g = group_lines(lyrics.lines);
        out = std::move(g.groups);
        excluded = g.excluded;
      }
      write_json_file(smp_out, samples_to_json(out));
      std::cerr << out.size() << " samples, " << excluded << " excluded\n";
    } else if (*run) {
      RunConfig cfg;
      cfg.task = run_task == "short" ? Task::kShortForm : Task::kLongForm;
      cfg.audio_variant = run_variant;
      cfg.sample_kind = run_kind == "group" ? SampleKind::kGroup : SampleKind::kMergedLine;
      cfg.segmenter = run_segmenter == "native" ? Segmenter::kNative : Segmenter::kRmsVad;
      cfg.vad_source_variant = run_vad_variant;
      cfg.repeats = run_repeats;
      cfg.adapter = run_adapter;
      cfg.language_forcing = !run_no_language;
      cfg.jobs = run_jobs;
      if (!run_vad_config.empty()) {
        cfg.vad = vad_config_from_json(read_json_file(run_vad_config));
      }
      const std::filesystem::path out_dir(run_out);
      cfg.cache_dir = run_cache.empty() ? out_dir / "cache" : std::filesystem::path(run_cache);
      cfg.cache_mode = run_replay     ? CacheMode::kReplay
                       : run_no_cache ? CacheMode::kOff
                                      : CacheMode::kReadWrite;

      const RunResult result = run_experiment(load_manifest(run_manifest), cfg);
      for (const SongResult& s : result.songs) {
        if (s.silent) std::cerr << "warning: " << s.id << ": no vocal activity, scored as empty\n";
      }
      const std::span<const RunResult> one(&result, 1);
      write_json_file(out_dir / "run_result.json", run_result_to_json(result));
      emit_report(one,
                  cfg.task == Task::kShortForm ? ReportLayout::kShortTable
                                               : ReportLayout::kLongTable,
                  out_dir / "table.md");
      emit_report(one, ReportLayout::kLanguageTable, out_dir / "languages.md");
      emit_report(one, ReportLayout::kPerSongCsv, out_dir / "per_song.csv");
      std::cout << describe(cfg) << ": ";
      std::cout << "WER " << format_percent(result.averaged.wer) << " (mean of "
                << cfg.repeats << " runs)";
      if (result.excluded_samples > 0) {
        std::cout << ", " << result.excluded_samples << " samples excluded";
      }
      std::cout << '\n';
    } else if (*report) {
      std::vector<RunResult> results;
      for (const std::string& path : rep_results) {
        results.push_back(run_result_from_json(read_json_file(path)));
      }
      const std::map<std::string, ReportLayout> layouts = {
          {"short", ReportLayout::kShortTable},
          {"long", ReportLayout::kLongTable},
          {"language", ReportLayout::kLanguageTable},
          {"per-song", ReportLayout::kPerSongCsv}};
      emit_report(results, layouts.at(rep_layout), rep_out);
    } else if (*align_cmd) {
      const std::vector<Token> ref =
          strip_nonwords(tokenize_lyrics({read_text(aln_ref), ""}));
      const std::vector<Token> hyp =
          strip_nonwords(tokenize_hypothesis(read_text(aln_hyp)));
      const Alignment alignment = align(ref, hyp);
      const EditCounts c = count_edits(alignment, ref);
      std::cout << "H " << c.hits << "  S " << c.substitutions << "  D "
                << c.deletions << "  I " << c.insertions << "  I10 "
                << c.insertions_in_runs << "  N " << c.reference_words() << '\n';
      print_rates(compute_rates(c));
      if (!aln_dump.empty()) {
        write_text_file(aln_dump, format_alignment(alignment, ref, hyp));
      }
    } else if (*transfer) {
      const LyricsFile lyrics = load_lyrics(trn_lyrics);
      const std::vector<TimedWord> words = timed_words_from_json(read_json_file(trn_timed));
      const std::vector<std::string> texts = lyrics.texts();
      const std::vector<DerivedLine> lines =
          transfer_line_timings(words, texts, lyrics.language);
      write_json_file(trn_out, derived_lines_to_json(lines));
      std::size_t ambiguous = 0;
      for (const DerivedLine& l : lines) ambiguous += l.ambiguous ? 1 : 0;
      std::cerr << lines.size() << " lines, " << ambiguous << " need manual timing\n";
    } else if (*separate) {
      const AdapterClient adapter(sep_adapter);
      std::cout << adapter.separate(sep_audio, sep_model, sep_out).string() << '\n';
    }
  } catch (const Error& e) {
    std::cerr << "lyreval: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
