#include "creem/prompts.hpp"

#include "creem/errors.hpp"

namespace creem::prompts {

std::string render(std::string_view tmpl, const std::map<std::string, std::string>& vars) {
    std::string out;
    out.reserve(tmpl.size());
    size_t i = 0;
    while (i < tmpl.size()) {
        char c = tmpl[i];
        if (c == '{') {
            size_t close = tmpl.find('}', i + 1);
            if (close == std::string_view::npos)
                raise("UnboundVariable", "unterminated placeholder");
            std::string name(tmpl.substr(i + 1, close - i - 1));
            auto it = vars.find(name);
            if (it == vars.end()) raise("UnboundVariable", name);
            out += it->second;
            i = close + 1;
        } else {
            out.push_back(c);
            ++i;
        }
    }
    return out;
}

const std::string_view kQuestion = R"(You will act as a model that generates a query relevant to the given dialogue.
Given the dialogue, what is the most salient high-level question we can answer about {speaker}, focusing mainly on the last utterance?

Dialogue:Speaker 1: I finally signed up for the pottery class downtown.
Speaker 2: That is exciting! When do you start?
Question about Speaker 1: What new hobby has Speaker 1 recently committed to?

Dialogue:Speaker 2: My knee has been acting up again ever since the marathon.
Speaker 1: Ouch, are you icing it?
Question about Speaker 2: How is Speaker 2's knee recovering after the marathon?

Dialogue:{text}
Question about {speaker}:)";

const std::string_view kBlendFirstSession = R"(Create insights by extracting detailed information from the <Current Dialogue>.
Here is an example that can be helpful.

[INPUT]
<Current Dialogue>
Speaker 1: I just adopted a beagle puppy named Biscuit.
Speaker 2: Congratulations! I am more of a cat person myself.

[OUTPUT]
[New] Speaker 1: Speaker 1 recently adopted a beagle puppy named Biscuit.
Remove: None
[New] Speaker 2: Speaker 2 prefers cats over dogs.
Remove: None

Now create {n_insights} insights.
[INPUT]
<Current Dialogue>
{current_dialogue}

[OUTPUT]
)";

const std::string_view kBlendRefine = R"(Create insights by extracting detailed information from the LAST TWO utterences of the <Current Dialogue> and reflecting the <Past Memories>.
You can make three types of insights. In one insight, include information about only one speaker.
1. [Updated]
If any information from the <Past Memories> is changed in the <Current Dialogue>, create an Insight reflecting the changes.
Only update the memory with the corresponding speaker's new information.
Then, indicate which past memory has been changed to remove.
2. [Redundant]
If <Current Dialogue> contains redundant information of the <Past Memories>, merge them including the details.
Then, indicate which past memory is redundant to remove.
3. [New]
If there is new information that is not related to the <Past Memories>, create a new Insight.
Then, write "None" and do not remove anything.

Here are some an examples.

[INPUT]
<Past Memories>
1. Speaker 1 wants to repaint the kitchen in pale yellow.
2. Speaker 2 runs a small bakery on weekends.

<Current Dialogue>:
Speaker 1: We ended up painting the kitchen a deep blue instead, it looks great.
Speaker 2: Nice! I just landed a weekday contract for my bakery, so weekends are finally free.

[OUTPUT]
[Updated] Speaker 1: Speaker 1 repainted the kitchen deep blue instead of the pale yellow they had planned.
Remove: memory #1
[Updated] Speaker 2: Speaker 2's bakery now has a weekday contract, freeing up their weekends.
Remove: memory #2

[INPUT]
<Past Memories>
1. Speaker 2 enjoys hiking in the mountains.

<Current Dialogue>:
Speaker 1: I started learning the violin this month.
Speaker 2: I went hiking again on Saturday, the trails were beautiful.

[OUTPUT]
[New] Speaker 1: Speaker 1 started learning the violin this month.
Remove: None
[Redundant] Speaker 2: Speaker 2 hikes regularly in the mountains and went again on Saturday.
Remove: memory #1

Now create {n_insights} insights.
[INPUT]
<Past Memories>
{retrieved_memories}

<Current Dialogue>:
{current_dialogue}

[OUTPUT]
)";

const std::string_view kRespond = R"(You will act as a response generator. Considering the given [Memory], continue the given conversation and create an appropriate response for the last utterance.
Consider the following factors when generating:
  - Do not make the response too long.
  - Do not contain any of the speaker's name explicitly.
  - Reflect the [Memory] in the generated response.

[Memory of {speaker}]:
{memory_stream}
[Conversation]:
{current_dialogue}
[Response] {speaker}:)";

const std::string_view kJudgeMemory = R"(You will be given a conversation between two individuals across multiple sessions. You will then be given the memory one system constructed from that conversation.
Your task is to rate the memory on one metric.
Please make sure you read and understand these instructions carefully.

Evaluation Criteria:

{criterion_name} (1-5): {criterion_description}

Evaluation Steps:
1. Read the conversation of all sessions carefully.
2. Read the memory and compare its content against the conversation.
3. Assign a score for {criterion_name} on a scale of 1 to 5, where 1 is the lowest and 5 is the highest.

[Conversation]:
{dialogue}

[Memory]:
{memory}

Evaluation Form (scores ONLY):

- {criterion_name}:)";

const std::string_view kQuestionGen = R"(Your task is to create three questions multiple choices that can be answered from the given dialogue. Actively reference the contents of the dialogue in the options, but try to use different expressions.
You will make several questions asking only about the target speaker. The subject of the question should be the target speaker.
Focus on the changed status of the target speaker and use that as a source for making questions.
To make the question difficult, you should follow these steps:
1. Find any information that has changed about the target speaker during the conversation.
The format should be: "[Before] past information [After] newly updated information"
2. Generate questions that asks about the changed information.
3. Next step is to make multiple answer options that is confusing. Make a correct choice from the newly updated information mentioned after the [After] token, and wrong choices from past outdated information mentioned after the [Before] token.
4. Write the correct answer with a brief explanation.

Here is an example question.
[Before] Speaker 1 planned to spend the holidays in Italy. [After] Speaker 1 booked a trip to Portugal instead.
Question 1: Where is Speaker 1 going for the holidays?
A) Portugal
B) Italy
C) Norway
D) No answer
Answer: A) Speaker 1 changed the original Italy plan and booked Portugal instead.

Now generate 3 questions about the target speaker, {target_speaker}.
Target Speaker: {target_speaker}
[Dialogue]
{dialogue}
[Information about {target_speaker}]
)";

const std::string_view kAnswerQuestions = R"(Based on the given memory, solve the three questions by choosing one of the options to answer the following question. Also choose the sentences that support your answer.
Make sure to answer based on ONLY the given memory, without prior knowledge.
The answer might not be directly addressed in the memory so try hard to infer the most reasonable answer among choices A, B, C. But if you still cannot find any answers using the memory, choose "D) No answer".

The answer format should be:

[Answers]:
Answer 1:
A) She is a very active and lively.

Supporting sentences:
Sentence 2) She has three kids and her mom is pediatrician.
Sentence 5) She commutes by boat every day to work and lives in amsterdam with canals.

Now solve the questions.

[Memory]:

{memory}

[Questions about {target_speaker}]

{questions}

[Answers]:)";

const std::string_view kPairwise = R"(You will be given a conversation between two individuals. You will then be given two response options for the next turn in the conversation.
Your task is to choose the better response based on one metric with a brief explanation.
Please make sure you read and understand these instructions carefully. Please keep this document open while reviewing, and refer to it as needed.

Evaluation Criteria:

{criterion_name} - {criterion_description}

Now choose the response that has better {criterion_lower} given the past and current session dialogue.

Past Sessions:
{past_dialogue}

Current Session:
{current_dialogue}

Response Options:
{response}

Better Reponse:)";

const std::string_view kSummemExtract = R"(You will act as a persona extractor. Read the single utterance below and extract the persona facts it reveals about the speaker, writing one short first-person sentence per line.
If the utterance reveals no persona fact, write "None".

Utterance by {speaker}: {utterance}
Persona lines:)";

const std::string_view kRebotSummarize = R"(Summarize the following session dialogue in a few sentences, covering both speakers. Write one concise paragraph.

[Session Dialogue]
{session_dialogue}

[Summary]
)";

const std::string_view kCarecallSummary = R"(Read the session dialogue and write the key facts worth remembering, one short sentence per line. Each line should mention exactly one speaker.

[Session Dialogue]
{session_dialogue}

[Summary Items]
)";

const std::string_view kCarecallClassify = R"(You will compare one memory sentence with one summary sentence and output exactly one operation name.
- PASS: when memory already contains information of summary
- REPLACE: when memory and summary are inconsistent, or when summary contains information of memory
- APPEND: when memory and summary are not related
- DELETE: when memory is no longer true and summary is no longer needed to be remembered

Memory: {memory}
Summary: {summary}
Operation:)";

const std::map<std::string, std::string>& template_registry() {
    static const std::map<std::string, std::string> registry = {
        {"question", std::string(kQuestion)},
        {"blend_first", std::string(kBlendFirstSession)},
        {"blend_refine", std::string(kBlendRefine)},
        {"respond", std::string(kRespond)},
        {"judge_memory", std::string(kJudgeMemory)},
        {"question_gen", std::string(kQuestionGen)},
        {"answer_questions", std::string(kAnswerQuestions)},
        {"pairwise", std::string(kPairwise)},
        {"summem_extract", std::string(kSummemExtract)},
        {"rebot_summarize", std::string(kRebotSummarize)},
        {"carecall_summary", std::string(kCarecallSummary)},
        {"carecall_classify", std::string(kCarecallClassify)},
    };
    return registry;
}

const std::map<std::string, std::string>& judge_criteria() {
    static const std::map<std::string, std::string> criteria = {
        {"integration",
         "This criterion evaluates whether the memory effectively connects information across "
         "sessions and accurately reflects changes in details about {speaker} over time. The goal "
         "is to prioritize memories that present a cohesive organization of content across "
         "sessions."},
        {"consistency",
         "This criterion evaluates whether there are any contradictory or conflicting pieces of "
         "information about {speaker} within the memory. The goal is to ensure that the "
         "information presented about {speaker} remains coherent and free from contradictions "
         "throughout the conversation."},
        {"sophistication",
         "This criterion assesses whether the content of the memory is advanced and goes beyond "
         "one-dimensional, direct information about {speaker} from the conversation."},
        {"relevance",
         "This criterion evaluates whether the memory is closely related to the {speaker} of the "
         "conversation. It ensures that the content contributes meaningfully to the ongoing "
         "conversation."},
        {"concreteness",
         "This criterion evaluates whether the memory contains substantial and specific "
         "information about {speaker}. It assesses the level of detail and precision in the "
         "representation of {speaker}."},
        {"diversity",
         "This criterion assesses whether the content of the memory has diverse information "
         "about {speaker}."},
    };
    return criteria;
}

const std::map<std::string, std::string>& pairwise_criteria() {
    static const std::map<std::string, std::string> criteria = {
        {"consistency",
         "The response should maintain consistency without contradictions from past sessions. "
         "The response aligns seamlessly with what has been discussed in previous sessions, "
         "following the individual's characteristic and current status."},
        {"memorability",
         "The response should effectively recalls past events correctly by retaining information "
         "from previous sessions. The response actively uses memory from the past dialogue to "
         "continue the conversation."},
    };
    return criteria;
}

}  // namespace creem::prompts
