#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace losslens {

enum class TaskType {
  closed_book_qa,
  commonsense_nli,
  reading_comprehension,
  coreference,
  examination,
  math_word_problem,
  other,
};

enum class Prompting { zero_shot, few_shot, few_shot_cot };
enum class AnswerForm { multi_choice, open_form };
enum class TaskMetric { accuracy, exact_match };

std::string to_string(TaskType v);
std::string to_string(Prompting v);
std::string to_string(AnswerForm v);
std::string to_string(TaskMetric v);

// Throw Error on unknown values; parsers wrap these with file/line context.
TaskType task_type_from_string(const std::string& s);
Prompting prompting_from_string(const std::string& s);
AnswerForm answer_form_from_string(const std::string& s);
TaskMetric task_metric_from_string(const std::string& s);

// One evaluated task: how its outcome log is scored and what a blind guesser
// would get.
struct DatasetDescriptor {
  std::string name;
  TaskType task_type = TaskType::other;
  Prompting prompting = Prompting::zero_shot;
  AnswerForm answer_form = AnswerForm::multi_choice;
  TaskMetric metric = TaskMetric::accuracy;
  std::optional<int> num_choices;  // multi_choice only, >= 2
  double random_baseline = 0.0;    // 1/num_choices for multi_choice, 0 for open_form

  // Invariants: multi_choice => num_choices >= 2, baseline == 1/num_choices;
  // open_form => num_choices absent, baseline == 0.
  void validate() const;

  static DatasetDescriptor make_multi_choice(std::string name, TaskType task,
                                             Prompting prompting, TaskMetric metric,
                                             int num_choices);
  static DatasetDescriptor make_open_form(std::string name, TaskType task,
                                          Prompting prompting, TaskMetric metric);
};

struct MultiChoiceOutcome {
  std::vector<double> choice_probs;  // entries in [0,1], sum within 1e-6 of 1
  int correct_index = 0;             // 0-based
};

struct OpenFormOutcome {
  std::string predicted_text;
  std::vector<std::string> gold_texts;  // nonempty
};

// One model prediction on one example.
struct ExampleOutcome {
  std::string example_id;
  std::variant<MultiChoiceOutcome, OpenFormOutcome> payload;

  bool is_multi_choice() const { return payload.index() == 0; }
  const MultiChoiceOutcome& mc() const { return std::get<MultiChoiceOutcome>(payload); }
  const OpenFormOutcome& of() const { return std::get<OpenFormOutcome>(payload); }

  void validate() const;
};

// One (run, checkpoint): model size, tokens consumed, pre-training loss, and
// whatever per-dataset metric values were logged for it.
struct CheckpointPoint {
  std::string run_id;
  double model_params = 0;    // N, parameters
  double tokens_trained = 0;  // D, tokens
  double loss = 0;            // L, nats/token, > 0
  std::map<std::string, double> metrics;  // dataset name -> value
};

enum class MetricKind { accuracy, exact_match, correct_choice_prob, brier, brier_per_option };

std::string to_string(MetricKind v);

struct MetricValue {
  MetricKind kind = MetricKind::accuracy;
  double value = 0.0;
  long n_examples = 0;
  bool higher_is_better = true;  // false exactly for the brier kinds
};

MetricValue make_metric(MetricKind kind, double value, long n_examples);

}  // namespace losslens
