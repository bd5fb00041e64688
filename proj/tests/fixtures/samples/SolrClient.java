package org.apache.solr.client.solrj;

import java.io.IOException;
import java.io.Serializable;

import org.apache.solr.client.solrj.response.UpdateResponse;

public abstract class SolrClient implements Serializable {

  /**
   * Deletes a single document by unique ID
   * @param collection the Solr collection to delete the document from
   * @param id  the ID of the document to delete
   */
  public UpdateResponse deleteById(String collection, String id) throws SolrServerException, IOException {
    return deleteById(collection, id, -1);
  }

  /**
   * Deletes a single document by unique ID
   * @param id  the ID of the document to delete
   */
  public UpdateResponse deleteById(String id) throws SolrServerException, IOException {
    return deleteById(null, id);
  }
}
