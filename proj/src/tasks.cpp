#include "rlvr/tasks.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "rlvr/rng.hpp"

namespace rlvr {

TaskFamily parse_family(std::string_view name) {
  if (name == "add") return TaskFamily::kAdd;
  if (name == "sub") return TaskFamily::kSub;
  if (name == "mul_mod") return TaskFamily::kMulMod;
  if (name == "digit_copy") return TaskFamily::kDigitCopy;
  if (name == "external") return TaskFamily::kExternal;
  throw std::invalid_argument("unknown task family: " + std::string(name));
}

std::string_view family_name(TaskFamily family) {
  switch (family) {
    case TaskFamily::kAdd:
      return "add";
    case TaskFamily::kSub:
      return "sub";
    case TaskFamily::kMulMod:
      return "mul_mod";
    case TaskFamily::kDigitCopy:
      return "digit_copy";
    case TaskFamily::kExternal:
      return "external";
  }
  return "external";
}

TokenSeq encode_prompt(const Vocab& vocab, std::string_view question) {
  TokenSeq tokens = vocab.encode(question);
  const TokenSeq suffix = vocab.suffix_tokens();
  tokens.insert(tokens.end(), suffix.begin(), suffix.end());
  return tokens;
}

namespace {

// Operands for difficulty d span [0, 10^d).
long long operand_bound(int difficulty) {
  long long bound = 1;
  for (int i = 0; i < difficulty; ++i) bound *= 10;
  return bound;
}

}  // namespace

std::vector<Task> generate_tasks(const Vocab& vocab, TaskFamily family,
                                 int difficulty, int count,
                                 std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("count < 1");
  if (difficulty < 1 || difficulty > 6) {
    throw std::invalid_argument("difficulty outside [1, 6]");
  }
  if (family == TaskFamily::kExternal) {
    throw std::invalid_argument("cannot generate the external family");
  }

  Philox rng = make_stream(seed, RngDomain::kTest,
                           static_cast<std::uint64_t>(family),
                           static_cast<std::uint64_t>(difficulty));
  const long long bound = operand_bound(difficulty);

  std::vector<Task> tasks;
  tasks.reserve(count);
  for (int index = 0; index < count; ++index) {
    Task task;
    task.family = family;
    task.difficulty = difficulty;
    std::ostringstream id;
    id << family_name(family) << "-d" << difficulty << "-s" << seed << "-"
       << index;
    task.id = id.str();

    std::ostringstream question;
    long long gold = 0;
    switch (family) {
      case TaskFamily::kAdd: {
        const long long a = static_cast<long long>(rng.next_below(bound));
        const long long b = static_cast<long long>(rng.next_below(bound));
        question << a << "+" << b << "=?";
        gold = a + b;
        break;
      }
      case TaskFamily::kSub: {
        const long long a = static_cast<long long>(rng.next_below(bound));
        const long long b = static_cast<long long>(rng.next_below(bound));
        question << a << "-" << b << "=?";
        gold = a - b;
        break;
      }
      case TaskFamily::kMulMod: {
        const long long a = static_cast<long long>(rng.next_below(bound));
        const long long b = static_cast<long long>(rng.next_below(bound));
        const long long m = 2 + static_cast<long long>(rng.next_below(
                                    std::min<long long>(bound * 10, 99)));
        question << a << "*" << b << "%" << m << "=?";
        gold = (a * b) % m;
        break;
      }
      case TaskFamily::kDigitCopy: {
        const int d = static_cast<int>(rng.next_below(10));
        question << d << "=?";
        gold = d;
        break;
      }
      case TaskFamily::kExternal:
        break;
    }
    task.question = question.str();
    task.gold = std::to_string(gold);
    task.prompt_tokens = encode_prompt(vocab, task.question);
    tasks.push_back(std::move(task));
  }
  return tasks;
}

LoadResult load_tasks_jsonl(const Vocab& vocab, const std::string& path,
                            int max_prompt_len) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open task file: " + path);
  return load_tasks_jsonl(vocab, in, max_prompt_len);
}

LoadResult load_tasks_jsonl(const Vocab& vocab, std::istream& in,
                            int max_prompt_len) {
  LoadResult result;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    nlohmann::json obj = nlohmann::json::parse(line, nullptr, false);
    if (obj.is_discarded() || !obj.is_object()) {
      result.diagnostics.push_back({line_no, "malformed JSON"});
      continue;
    }
    if (line_no == 1 && obj.contains("schema")) {
      if (obj["schema"] != "justrl-tasks-v1") {
        result.diagnostics.push_back({line_no, "unrecognized schema"});
      }
      continue;
    }
    if (!obj.contains("id") || !obj.contains("question") ||
        !obj.contains("gold") || !obj["id"].is_string() ||
        !obj["question"].is_string() || !obj["gold"].is_string()) {
      result.diagnostics.push_back(
          {line_no, "missing or non-string id/question/gold"});
      continue;
    }
    Task task;
    task.id = obj["id"].get<std::string>();
    task.question = obj["question"].get<std::string>();
    task.gold = obj["gold"].get<std::string>();
    task.family = TaskFamily::kExternal;
    task.difficulty = 1;
    if (obj.contains("family") && obj["family"].is_string()) {
      try {
        task.family = parse_family(obj["family"].get<std::string>());
      } catch (const std::invalid_argument&) {
        result.diagnostics.push_back({line_no, "unknown family, kept external"});
      }
    }
    if (obj.contains("difficulty") && obj["difficulty"].is_number_integer()) {
      task.difficulty = obj["difficulty"].get<int>();
    }
    task.prompt_tokens = encode_prompt(vocab, task.question);
    if (static_cast<int>(task.prompt_tokens.size()) > max_prompt_len) {
      std::ostringstream msg;
      msg << "prompt length " << task.prompt_tokens.size() << " exceeds "
          << max_prompt_len;
      result.diagnostics.push_back({line_no, msg.str()});
      continue;
    }
    result.tasks.push_back(std::move(task));
  }
  return result;
}

void save_tasks_jsonl(const std::vector<Task>& tasks,
                      const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write task file: " + path);
  save_tasks_jsonl(tasks, out);
}

void save_tasks_jsonl(const std::vector<Task>& tasks, std::ostream& out) {
  out << R"({"schema":"justrl-tasks-v1"})" << "\n";
  for (const Task& task : tasks) {
    nlohmann::json obj;
    obj["id"] = task.id;
    obj["question"] = task.question;
    obj["gold"] = task.gold;
    obj["family"] = std::string(family_name(task.family));
    obj["difficulty"] = task.difficulty;
    out << obj.dump() << "\n";
  }
}

}  // namespace rlvr
