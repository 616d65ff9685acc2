# Tests for vertex-ramsey-toolkit
