#ifndef RLVR_TASKS_HPP_
#define RLVR_TASKS_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "rlvr/vocab.hpp"

namespace rlvr {

// Task families: digit_copy is quickly learnable by the toy policy (smoke
// signal), mul_mod stays hard (plateau probe). kExternal marks tasks loaded
// from JSONL files that carry no family field.
enum class TaskFamily { kAdd, kSub, kMulMod, kDigitCopy, kExternal };

TaskFamily parse_family(std::string_view name);
std::string_view family_name(TaskFamily family);

struct Task {
  std::string id;
  std::string question;  // text form, without the instruction suffix
  TokenSeq prompt_tokens;  // BOS + encoded question + fixed suffix tokens
  std::string gold;
  TaskFamily family = TaskFamily::kExternal;
  int difficulty = 1;

  bool operator==(const Task&) const = default;
};

// BOS + question tokens + suffix tokens, shared by the generator and loader.
TokenSeq encode_prompt(const Vocab& vocab, std::string_view question);

// Deterministic per (family, difficulty, seed); ids are unique and golds come
// from exact integer arithmetic, already in canonical form.
std::vector<Task> generate_tasks(const Vocab& vocab, TaskFamily family,
                                 int difficulty, int count,
                                 std::uint64_t seed);

struct LoadDiagnostic {
  int line = 0;
  std::string message;
};

struct LoadResult {
  std::vector<Task> tasks;
  std::vector<LoadDiagnostic> diagnostics;
};

// One JSON object {id, question, gold} per line; an optional first line
// {"schema":"justrl-tasks-v1"} is recognized and skipped. Malformed lines and
// questions exceeding max_prompt_len are reported per line and skipped.
LoadResult load_tasks_jsonl(const Vocab& vocab, const std::string& path,
                            int max_prompt_len);
LoadResult load_tasks_jsonl(const Vocab& vocab, std::istream& in,
                            int max_prompt_len);

void save_tasks_jsonl(const std::vector<Task>& tasks, const std::string& path);
void save_tasks_jsonl(const std::vector<Task>& tasks, std::ostream& out);

}  // namespace rlvr

#endif  // RLVR_TASKS_HPP_
