# edfn test suite
