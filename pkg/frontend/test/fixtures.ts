/** Payloads captured from the running service over the demo fixture data. */

import { GrantSummary, RecommendationView, ResearcherView } from '../src/api.js';

export const grants: GrantSummary[] = [
  {
    "grant_id": "agrifood",
    "historical_documents": 1,
    "surface_documents": 1,
    "title": "agrifood"
  },
  {
    "grant_id": "infotech",
    "historical_documents": 1,
    "surface_documents": 1,
    "title": "infotech"
  },
  {
    "grant_id": "welfare",
    "historical_documents": 1,
    "surface_documents": 1,
    "title": "welfare"
  }
];

export const alpha05: RecommendationView = {
  "alpha": 0.5,
  "beta": 0.5,
  "entries": [
    {
      "historical": 0.759,
      "matched_keywords": [
        "Machine Learning",
        "Neural Network"
      ],
      "matched_rules": [
        {
          "antecedent": [
            "reinforcement learning"
          ],
          "confidence": 0.75,
          "consequent": [
            "machine learning"
          ],
          "lift": 0.9375,
          "support": 0.6
        },
        {
          "antecedent": [
            "reinforcement learning"
          ],
          "confidence": 0.75,
          "consequent": [
            "neural network"
          ],
          "lift": 0.9375,
          "support": 0.6
        }
      ],
      "researcher_id": "1-C",
      "selected": true,
      "surface": 0.377,
      "total": 0.5680000000000001
    },
    {
      "historical": 0.0,
      "matched_keywords": [
        "Information Retrieval",
        "Knowledge Acquisition",
        "Natural Language Processing"
      ],
      "matched_rules": [],
      "researcher_id": "1-A",
      "selected": false,
      "surface": 0.708,
      "total": 0.354
    },
    {
      "historical": 0.0,
      "matched_keywords": [
        "Industrial Engineering",
        "Information Theory"
      ],
      "matched_rules": [],
      "researcher_id": "1-B",
      "selected": false,
      "surface": 0.608,
      "total": 0.304
    },
    {
      "historical": 0.0,
      "matched_keywords": [
        "Knowledge Acquisition",
        "Neural Network"
      ],
      "matched_rules": [],
      "researcher_id": "1-D",
      "selected": false,
      "surface": 0.35,
      "total": 0.175
    },
    {
      "historical": 0.256,
      "matched_keywords": [],
      "matched_rules": [
        {
          "antecedent": [
            "lms algorithm"
          ],
          "confidence": 1.0,
          "consequent": [
            "machine learning"
          ],
          "lift": 1.25,
          "support": 0.2
        }
      ],
      "researcher_id": "1-F",
      "selected": false,
      "surface": 0.0,
      "total": 0.128
    },
    {
      "historical": 0.0,
      "matched_keywords": [
        "Computational Neuroscience",
        "Neuroinformatics"
      ],
      "matched_rules": [],
      "researcher_id": "1-E",
      "selected": false,
      "surface": 0.25,
      "total": 0.125
    }
  ],
  "grant_id": "infotech",
  "note": "1 researcher(s) at or above threshold 0.4; within the shortlist target of at most 2",
  "selected": [
    "1-C"
  ],
  "threshold": 0.4
};

export const alpha08: RecommendationView = {
  "alpha": 0.8,
  "beta": 0.19999999999999996,
  "entries": [
    {
      "historical": 0.0,
      "matched_keywords": [
        "Information Retrieval",
        "Knowledge Acquisition",
        "Natural Language Processing"
      ],
      "matched_rules": [],
      "researcher_id": "1-A",
      "selected": true,
      "surface": 0.708,
      "total": 0.5664
    },
    {
      "historical": 0.0,
      "matched_keywords": [
        "Industrial Engineering",
        "Information Theory"
      ],
      "matched_rules": [],
      "researcher_id": "1-B",
      "selected": true,
      "surface": 0.608,
      "total": 0.4864
    },
    {
      "historical": 0.759,
      "matched_keywords": [
        "Machine Learning",
        "Neural Network"
      ],
      "matched_rules": [
        {
          "antecedent": [
            "reinforcement learning"
          ],
          "confidence": 0.75,
          "consequent": [
            "machine learning"
          ],
          "lift": 0.9375,
          "support": 0.6
        },
        {
          "antecedent": [
            "reinforcement learning"
          ],
          "confidence": 0.75,
          "consequent": [
            "neural network"
          ],
          "lift": 0.9375,
          "support": 0.6
        }
      ],
      "researcher_id": "1-C",
      "selected": true,
      "surface": 0.377,
      "total": 0.4534
    },
    {
      "historical": 0.0,
      "matched_keywords": [
        "Knowledge Acquisition",
        "Neural Network"
      ],
      "matched_rules": [],
      "researcher_id": "1-D",
      "selected": false,
      "surface": 0.35,
      "total": 0.27999999999999997
    },
    {
      "historical": 0.0,
      "matched_keywords": [
        "Computational Neuroscience",
        "Neuroinformatics"
      ],
      "matched_rules": [],
      "researcher_id": "1-E",
      "selected": false,
      "surface": 0.25,
      "total": 0.2
    },
    {
      "historical": 0.256,
      "matched_keywords": [],
      "matched_rules": [
        {
          "antecedent": [
            "lms algorithm"
          ],
          "confidence": 1.0,
          "consequent": [
            "machine learning"
          ],
          "lift": 1.25,
          "support": 0.2
        }
      ],
      "researcher_id": "1-F",
      "selected": false,
      "surface": 0.0,
      "total": 0.05119999999999999
    }
  ],
  "grant_id": "infotech",
  "note": "3 researcher(s) at or above threshold 0.4; beyond the shortlist target of at most 2",
  "selected": [
    "1-A",
    "1-B",
    "1-C"
  ],
  "threshold": 0.4
};

export const alpha02: RecommendationView = {
  "alpha": 0.2,
  "beta": 0.8,
  "entries": [
    {
      "historical": 0.759,
      "matched_keywords": [
        "Machine Learning",
        "Neural Network"
      ],
      "matched_rules": [
        {
          "antecedent": [
            "reinforcement learning"
          ],
          "confidence": 0.75,
          "consequent": [
            "machine learning"
          ],
          "lift": 0.9375,
          "support": 0.6
        },
        {
          "antecedent": [
            "reinforcement learning"
          ],
          "confidence": 0.75,
          "consequent": [
            "neural network"
          ],
          "lift": 0.9375,
          "support": 0.6
        }
      ],
      "researcher_id": "1-C",
      "selected": true,
      "surface": 0.377,
      "total": 0.6826000000000001
    },
    {
      "historical": 0.256,
      "matched_keywords": [],
      "matched_rules": [
        {
          "antecedent": [
            "lms algorithm"
          ],
          "confidence": 1.0,
          "consequent": [
            "machine learning"
          ],
          "lift": 1.25,
          "support": 0.2
        }
      ],
      "researcher_id": "1-F",
      "selected": false,
      "surface": 0.0,
      "total": 0.2048
    },
    {
      "historical": 0.0,
      "matched_keywords": [
        "Information Retrieval",
        "Knowledge Acquisition",
        "Natural Language Processing"
      ],
      "matched_rules": [],
      "researcher_id": "1-A",
      "selected": false,
      "surface": 0.708,
      "total": 0.1416
    },
    {
      "historical": 0.0,
      "matched_keywords": [
        "Industrial Engineering",
        "Information Theory"
      ],
      "matched_rules": [],
      "researcher_id": "1-B",
      "selected": false,
      "surface": 0.608,
      "total": 0.1216
    },
    {
      "historical": 0.0,
      "matched_keywords": [
        "Knowledge Acquisition",
        "Neural Network"
      ],
      "matched_rules": [],
      "researcher_id": "1-D",
      "selected": false,
      "surface": 0.35,
      "total": 0.06999999999999999
    },
    {
      "historical": 0.0,
      "matched_keywords": [
        "Computational Neuroscience",
        "Neuroinformatics"
      ],
      "matched_rules": [],
      "researcher_id": "1-E",
      "selected": false,
      "surface": 0.25,
      "total": 0.05
    }
  ],
  "grant_id": "infotech",
  "note": "1 researcher(s) at or above threshold 0.4; within the shortlist target of at most 2",
  "selected": [
    "1-C"
  ],
  "threshold": 0.4
};

export const researcher1C: ResearcherView = {
  "display_name": "Researcher 1-C",
  "kaken_keywords": [
    "Machine Learning",
    "Neural Network"
  ],
  "paper_document_ids": [
    "researchers/1-C/papers/p1.txt"
  ],
  "past_kaken_document_ids": [
    "researchers/1-C/kaken_abstracts/a2014.txt"
  ],
  "researcher_id": "1-C"
};

export const badAlphaBody = {"error": "alpha must be within [0, 1], got 1.3", "field": "alpha"};
