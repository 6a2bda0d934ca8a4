#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace rtlbench::problems {

enum class Difficulty { kBasic, kIntermediate, kAdvanced };
enum class PromptLevel { kLow, kMedium, kHigh };

const char* DifficultyName(Difficulty d);      // "Basic" / ...
const char* PromptLevelName(PromptLevel l);    // "L" / "M" / "H"
PromptLevel ParsePromptLevel(const std::string& s);
constexpr PromptLevel kAllLevels[] = {PromptLevel::kLow, PromptLevel::kMedium,
                                      PromptLevel::kHigh};

struct Port {
  enum Dir { kInput, kOutput };
  std::string name;
  Dir dir = kInput;
  int width = 1;
  bool is_signed = false;
  bool is_reg = false;
};

// Named signal values, masked to port width.
using SignalMap = std::map<std::string, uint64_t>;

// Model state; one word for most problems, 64 words for the RAM.
using State = std::vector<uint64_t>;

struct CombinationalModel {
  std::function<SignalMap(const SignalMap&)> eval;
};

struct SequentialModel {
  State reset_state;
  std::function<State(const State&, const SignalMap&)> step;
  // Outputs sampled after a clock edge: new state plus the inputs still
  // applied (Mealy-capable).
  std::function<SignalMap(const State&, const SignalMap&)> output;
};

struct GoldenVariant {
  std::string body;  // completion text: statements through endmodule
  std::string note;  // e.g. "synchronous reset"
};

struct Problem {
  int id = 0;
  Difficulty difficulty = Difficulty::kBasic;
  std::string title;
  std::string module_name;
  std::vector<Port> ports;  // data ports; clk/reset appear here too
  std::string module_header;  // module line + internal declarations
  std::string prompt_low;     // byte prefix of prompt_medium
  std::string prompt_medium;  // byte prefix of prompt_high
  std::string prompt_high;
  std::variant<CombinationalModel, SequentialModel> model;

  std::vector<GoldenVariant> goldens;  // first entry is the primary golden
  std::string mutant_body;
  std::string mutant_note;  // the documented single defect

  bool IsSequential() const {
    return std::holds_alternative<SequentialModel>(model);
  }
  bool HasPort(const std::string& name) const;
  const Port& PortByName(const std::string& name) const;
  std::vector<Port> DataInputs() const;   // inputs minus clk/reset
  std::vector<Port> DataOutputs() const;
  int InputSpaceBits() const;  // sum of data-input widths
};

// All 17 problems, in id order. The set is immutable after first load.
const std::vector<Problem>& LoadProblemSet();
const Problem& GetProblem(int id);

std::string PromptFor(const Problem& problem, PromptLevel level);

// Ground-truth evaluation. Throws std::invalid_argument on unknown signals
// or width violations.
SignalMap RefEval(const Problem& problem, const SignalMap& inputs);

struct StepResult {
  State state;
  SignalMap outputs;
};
StepResult RefStep(const Problem& problem, const State& state,
                   const SignalMap& inputs, bool reset);

// JSON document with id, difficulty, title and the three prompts.
std::string ProblemSetToJson();

}  // namespace rtlbench::problems
