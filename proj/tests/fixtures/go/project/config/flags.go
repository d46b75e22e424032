package config

type FeatureFlags struct {
	EnableArchival                                bool
	EnableReadVisibility                          bool
	WorkflowExecutionAlreadyCompletedErrorEnabled bool
	EnableGlobalDomain                            bool
	EnableShardScanner                            bool
}
