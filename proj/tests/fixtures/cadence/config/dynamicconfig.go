package dynamicconfig

type Flags struct {
	ArchivalEnabled                               bool
	EnableRead                                    bool
	Enable                                        bool
	ArchivalStatusEnabled                         bool
	GetEnabledClusterInfo                         bool
	WorkflowExecutionAlreadyCompletedErrorEnabled bool
	EnableConsistentQuery                         bool
	EnableDropStuckTaskByDomainID                 bool
	EnableDomainNotActiveAutoForwarding           bool
	EnableGracefulFailover                        bool
	EnableClientVersionCheck                      bool
	EnableQueryAttributeValidation                bool
	EnableReplicationTaskGeneration               bool
	EnablePriorityTaskProcessor                   bool
	EnableDebugMode                               bool
	EnableTasklistIsolation                       bool
	EnableSyncMatch                               bool
	EnableHistoryScavenger                        bool
	EnableExecutionsScanner                       bool
	EnableSQLAsyncTransaction                     bool
	EnableShardIDMetrics                          bool
	EnableReadVisibilityFromES                    bool
	EnableLogCustomerQueryParameter               bool
	EnableValidator                               bool
	EnableTimerDebugLogByDomainID                 bool
	EnableCrossClusterOperations                  bool
	EnableAdminProtection                         bool
	EnableStickyQuery                             bool
	EnableAsyncProcessing                         bool
	EnableParentClosePolicy                       bool
}
